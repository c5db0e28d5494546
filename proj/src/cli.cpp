#include "flagcalc/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "flagcalc/convolution.hpp"
#include "flagcalc/errors.hpp"
#include "flagcalc/gkm.hpp"
#include "flagcalc/nilhecke.hpp"
#include "flagcalc/schubert.hpp"

#ifndef FLAGCALC_DEFAULT_GOLDEN_DIR
#define FLAGCALC_DEFAULT_GOLDEN_DIR "data/golden"
#endif

namespace flagcalc {

namespace {

using nlohmann::ordered_json;
namespace fs = std::filesystem;

const std::vector<std::string> kIdentities = {"coproduct",    "antipode",      "specialized", "gkm-coproduct",
                                              "gkm-antipode", "total-leibniz", "convolution"};

struct RunConfig {
  std::string family_name = "A";
  Family family = Family::A;
  int rank = 2;      // as typed: n for family A (the group S_n), the Lie rank otherwise
  int lie_rank = 1;
  std::string identity;
  std::string format = "text";
  std::string element;
  bool has_element = false;
  std::string perm;
  bool has_perm = false;
  bool gkm = false;
  std::uint64_t seed = 0;
  int samples = 100;
  int jobs = 1;
  bool allow_large = false;
  bool quiet = false;
  bool timing = false;
  std::string output;
};

int rank_cap(Family f) {
  switch (f) {
    case Family::A: return 5;
    case Family::B:
    case Family::C: return 3;
    case Family::D: return 4;
  }
  return 0;
}

int default_jobs() {
  if (const char* env = std::getenv("FLAGCALC_JOBS")) {
    try {
      const int j = std::stoi(env);
      if (j >= 1) return j;
    } catch (const std::exception&) {
    }
    throw UsageError(std::string("FLAGCALC_JOBS must be a positive integer, got '") + env + "'");
  }
  return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

void resolve(RunConfig& c) {
  c.family = parse_family(c.family_name);
  c.family_name = std::string(1, family_letter(c.family));
  if (c.family == Family::A) {
    if (c.rank < 2) throw UsageError("family A takes --rank n >= 2 (the group S_n)");
    c.lie_rank = c.rank - 1;
  } else {
    if (c.rank < 1 || (c.family == Family::D && c.rank < 2)) throw ConfigError("unsupported rank for " + c.family_name);
    c.lie_rank = c.rank;
  }
  if (c.rank > rank_cap(c.family) && !c.allow_large) {
    throw ResourceError("rank " + std::to_string(c.rank) + " exceeds the default cap " +
                            std::to_string(rank_cap(c.family)) + " for family " + c.family_name +
                            "; pass --allow-large to lift it",
                        weyl_group_order(c.family, c.lie_rank));
  }
  if (c.has_perm && c.family != Family::A) throw UsageError("--perm is only accepted for family A");
  if (c.has_perm && c.has_element) throw UsageError("give either --element or --perm, not both");
  if (c.jobs < 1) throw UsageError("--jobs must be positive");
  if (c.samples < 0) throw UsageError("--samples must be non-negative");
}

std::string group_label(const RunConfig& c) {
  std::string s = c.family_name + std::to_string(c.lie_rank);
  if (c.family == Family::A) s += " (S" + std::to_string(c.rank) + ")";
  return s;
}

std::string show_word(const Word& w) { return w.empty() ? std::string("e") : format_word(w); }

WeylElement parse_perm(const RunConfig& c, const RootSystemPtr& rs) {
  std::vector<int> images;
  std::string text = c.perm;
  if (text.find(',') == std::string::npos) {
    for (char ch : text) {
      if (ch == ' ') continue;
      if (ch < '1' || ch > '9') throw UsageError("bad one-line permutation '" + c.perm + "'");
      images.push_back(ch - '0');
    }
  } else {
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
      try {
        std::size_t used = 0;
        images.push_back(std::stoi(part, &used));
        if (used != part.size()) throw UsageError("");
      } catch (const std::exception&) {
        throw UsageError("bad one-line permutation '" + c.perm + "'");
      }
    }
  }
  std::vector<int> sorted = images;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] != static_cast<int>(i) + 1 || sorted.size() != static_cast<std::size_t>(c.rank)) {
      throw UsageError("'" + c.perm + "' is not a permutation of 1.." + std::to_string(c.rank));
    }
  }
  return WeylElement::from_images(rs, images);
}

std::vector<std::size_t> selected_elements(const RunConfig& c, const WeylGroup& group) {
  if (c.has_perm) return {group.index_of(parse_perm(c, group.root_system_ptr()))};
  if (c.has_element) {
    const Word w = parse_word(c.element, c.lie_rank);
    return {group.index_of(WeylElement::from_word(group.root_system_ptr(), w))};
  }
  std::vector<std::size_t> all(group.size());
  for (std::size_t k = 0; k < all.size(); ++k) all[k] = k;
  return all;
}

// Runs fn(0..count-1) on `jobs` threads that pull the next index from a shared
// counter; results land in input order whatever the completion order.
template <class R, class F>
std::vector<R> parallel_map(std::size_t count, int jobs, F fn, std::ostream* progress, const std::string& label) {
  std::vector<R> results(count);
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> done{0};
  std::mutex mu;
  std::exception_ptr failure;
  auto worker = [&] {
    while (true) {
      const std::size_t k = next.fetch_add(1);
      if (k >= count) return;
      {
        std::lock_guard<std::mutex> lock(mu);
        if (failure) return;
      }
      try {
        results[k] = fn(k);
      } catch (...) {
        std::lock_guard<std::mutex> lock(mu);
        if (!failure) failure = std::current_exception();
        return;
      }
      const std::size_t d = ++done;
      if (progress) {
        std::lock_guard<std::mutex> lock(mu);
        *progress << "[" << label << "] " << d << "/" << count << "\n";
      }
    }
  };
  const int n = static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(jobs), std::max<std::size_t>(count, 1)));
  if (n <= 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    for (int i = 0; i < n; ++i) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
  }
  if (failure) std::rethrow_exception(failure);
  return results;
}

void require_type_a(const RunConfig& c, const std::string& what) {
  if (c.family != Family::A) throw UsageError(what + " needs family A");
}

void require_sweep_allowed(const RunConfig& c, bool heavy) {
  if (c.allow_large) return;
  if (heavy || (c.family == Family::A && c.rank > 4)) {
    throw ResourceError("the " + c.identity + " sweep on " + group_label(c) + " is behind --allow-large",
                        weyl_group_order(c.family, c.lie_rank));
  }
}

Poly rename_block(const Poly& p, Block from, Block to) {
  SignedRenaming r;
  r.set_block(from, to);
  return r.apply(p);
}

std::vector<Report> total_leibniz_reports(const RunConfig& c, const WeylGroupPtr& group, std::ostream* progress) {
  if (c.has_element || c.has_perm) throw UsageError("total-leibniz sweeps monomials; --element does not apply");
  const int dim = group->root_system().ambient_dim();
  const int top = group->longest().length();
  const std::vector<Poly> monomials = t_monomials(dim, top);
  auto sweep = parallel_map<Report>(
      monomials.size(), c.jobs,
      [&](std::size_t k) {
        const Poly F = rename_block(monomials[k], Block::T, Block::X);
        Report r;
        r.identity = "total-leibniz";
        r.subject = "F=" + F.to_string();
        r.substitutions = group->size();
        const auto [left, right] = total_leibniz_sides(group, F);
        if (!(left == right)) {
          r.pass = false;
          NilHeckeElement diff = left;
          diff -= right;
          r.witnesses.push_back({{}, diff.to_string()});
        }
        return r;
      },
      progress, "total-leibniz monomials");

  std::mt19937_64 rng(c.seed);
  const Block xs[] = {Block::X};
  std::vector<std::pair<Poly, Poly>> pairs;
  for (int s = 0; s < c.samples; ++s) {
    Poly F = random_poly(rng, xs, dim, top, 3);
    Poly G = random_poly(rng, xs, dim, top, 3);
    pairs.emplace_back(std::move(F), std::move(G));
  }
  auto random = parallel_map<Report>(
      pairs.size(), c.jobs,
      [&](std::size_t k) {
        Report r;
        r.identity = "total-leibniz-polynomial";
        r.subject = "F=" + pairs[k].first.to_string() + "; G=" + pairs[k].second.to_string();
        r.substitutions = group->size();
        const auto [left, right] = total_leibniz_polynomial_sides(*group, pairs[k].first, pairs[k].second);
        if (!(left == right)) {
          r.pass = false;
          r.witnesses.push_back({{}, (left - right).to_string()});
        }
        return r;
      },
      progress, "total-leibniz samples");
  sweep.insert(sweep.end(), random.begin(), random.end());
  return sweep;
}

std::vector<Report> convolution_reports(const RunConfig& c, const WeylGroupPtr& group, std::ostream* progress) {
  require_type_a(c, "convolution");
  const SchubertTable table(group);
  const DemazureConvention conv;  // frozen; `selftest` guards it against the search
  const std::vector<std::size_t> elems = selected_elements(c, *group);
  auto out = parallel_map<Report>(
      elems.size(), c.jobs, [&](std::size_t k) { return verify_demazure_action(table, conv, (*group)[elems[k]]); },
      progress, "convolution");

  std::mt19937_64 rng(c.seed);
  const Block xt[] = {Block::X, Block::T};
  const Block ts[] = {Block::T};
  std::vector<std::pair<Poly, Poly>> pairs;
  for (int s = 0; s < c.samples; ++s) {
    Poly f = random_poly(rng, xt, c.rank, c.rank, 3);
    Poly g = random_poly(rng, ts, c.rank, c.rank, 3);
    pairs.emplace_back(std::move(f), std::move(g));
  }
  auto random = parallel_map<Report>(
      pairs.size(), c.jobs,
      [&](std::size_t k) { return verify_total_leibniz_via_convolution(*group, pairs[k].first, pairs[k].second); },
      progress, "convolution samples");
  out.insert(out.end(), random.begin(), random.end());
  return out;
}

std::vector<Report> run_identity(const RunConfig& c, const WeylGroupPtr& group, std::ostream* progress) {
  const std::string& id = c.identity;
  if (id == "total-leibniz") {
    require_sweep_allowed(c, false);
    return total_leibniz_reports(c, group, progress);
  }
  if (id == "convolution") {
    require_sweep_allowed(c, false);
    return convolution_reports(c, group, progress);
  }
  const std::vector<std::size_t> elems = selected_elements(c, *group);
  if (id == "gkm-coproduct" || id == "gkm-antipode") {
    require_sweep_allowed(c, id == "gkm-coproduct" && c.family == Family::D && c.lie_rank >= 4);
    const GKMSchubertTable table(group);
    const bool co = id == "gkm-coproduct";
    return parallel_map<Report>(
        elems.size(), c.jobs,
        [&](std::size_t k) {
          const WeylElement& w = (*group)[elems[k]];
          return co ? verify_coproduct_gkm(table, w) : verify_antipode_gkm(table, w);
        },
        progress, id);
  }
  require_type_a(c, id);
  require_sweep_allowed(c, false);
  const SchubertTable table(group);
  return parallel_map<Report>(
      elems.size(), c.jobs,
      [&](std::size_t k) {
        const WeylElement& w = (*group)[elems[k]];
        if (id == "coproduct") return verify_coproduct(table, w);
        if (id == "antipode") return verify_antipode(table, w);
        return verify_specialized(table, w);
      },
      progress, id);
}

std::string latex_escape_word(const Word& w) { return w.empty() ? std::string("$e$") : "$" + format_word(w) + "$"; }

std::string render_verify(const RunConfig& c, const std::vector<Report>& reports, double seconds) {
  bool pass = true;
  std::size_t total = 0;
  bool uniform = true;
  for (const Report& r : reports) {
    pass = pass && r.pass;
    total += r.substitutions;
    uniform = uniform && r.substitutions == reports.front().substitutions;
  }
  std::ostringstream os;
  if (c.format == "json") {
    ordered_json j;
    j["identity"] = c.identity;
    j["family"] = c.family_name;
    j["rank"] = c.rank;
    j["group"] = c.family_name + std::to_string(c.lie_rank);
    j["seed"] = c.seed;
    j["pass"] = pass;
    j["checks"] = reports.size();
    j["substitutions"] = total;
    if (c.timing) j["wall_clock_seconds"] = seconds;
    ordered_json arr = ordered_json::array();
    for (const Report& r : reports) arr.push_back(r.to_json());
    j["reports"] = std::move(arr);
    os << j.dump(2) << "\n";
  } else if (c.format == "latex") {
    os << "\\begin{tabular}{llr}\n\\hline\nelement & result & substitutions \\\\\n\\hline\n";
    for (const Report& r : reports) {
      const std::string label = r.subject.empty() ? latex_escape_word(r.element) : "\\verb|" + r.subject + "|";
      os << label << " & " << (r.pass ? "PASS" : "FAIL") << " & " << r.substitutions << " \\\\\n";
    }
    os << "\\hline\n\\end{tabular}\n";
  } else {
    for (const Report& r : reports) {
      os << (r.pass ? "PASS " : "FAIL ") << r.identity << " ";
      os << (r.subject.empty() ? show_word(r.element) : r.subject);
      os << " substitutions=" << r.substitutions << "\n";
      for (const Witness& w : r.witnesses) {
        os << "  at";
        for (const Word& a : w.at) os << " [" << show_word(a) << "]";
        os << ": " << w.residual << "\n";
      }
    }
    os << (pass ? "PASS " : "FAIL ") << c.identity << " on " << group_label(c) << ": " << reports.size()
       << (c.identity == "total-leibniz" || c.identity == "convolution" ? " checks" : " elements");
    if (uniform && !reports.empty()) {
      os << ", " << reports.front().substitutions << " substitutions each";
    } else {
      os << ", " << total << " substitutions";
    }
    os << ", seed " << c.seed;
    if (c.timing) os << ", " << seconds << " s";
    os << "\n";
  }
  return os.str();
}

std::string render_poly(const RunConfig& c, const WeylGroupPtr& group) {
  const std::vector<std::size_t> elems = selected_elements(c, *group);
  const bool single = c.has_element || c.has_perm;
  std::ostringstream os;
  if (c.gkm) {
    const GKMSchubertTable table(group);
    if (c.format == "json") {
      ordered_json arr = ordered_json::array();
      for (std::size_t k : elems) {
        ordered_json j;
        j["element"] = group->word(k);
        j["values"] = table[k].to_json();
        arr.push_back(std::move(j));
      }
      os << arr.dump(2) << "\n";
    } else if (c.format == "latex") {
      os << "\\begin{tabular}{l" << std::string(group->size(), 'c') << "}\n\\hline\n$w \\backslash u$";
      for (std::size_t u = 0; u < group->size(); ++u) os << " & " << latex_escape_word(group->word(u));
      os << " \\\\\n\\hline\n";
      for (std::size_t k : elems) {
        os << latex_escape_word(group->word(k));
        for (std::size_t u = 0; u < group->size(); ++u) os << " & $" << table[k].value(u).to_latex() << "$";
        os << " \\\\\n";
      }
      os << "\\hline\n\\end{tabular}\n";
    } else {
      os << "u";
      for (std::size_t u = 0; u < group->size(); ++u) os << (u ? " | " : ": ") << show_word(group->word(u));
      os << "\n";
      for (std::size_t k : elems) {
        os << "xi[" << show_word(group->word(k)) << "]";
        for (std::size_t u = 0; u < group->size(); ++u) os << (u ? " | " : ": ") << table[k].value(u).to_string();
        os << "\n";
      }
    }
    return os.str();
  }
  if (c.family != Family::A) throw UsageError("polynomial output needs family A; use --gkm for other families");
  const SchubertTable table(group);
  if (c.format == "json") {
    ordered_json arr = ordered_json::array();
    for (std::size_t k : elems) {
      ordered_json j;
      j["element"] = group->word(k);
      j["one_line"] = (*group)[k].one_line();
      j["poly"] = table[k].to_string();
      arr.push_back(std::move(j));
    }
    os << arr.dump(2) << "\n";
  } else if (c.format == "latex") {
    if (single) {
      os << table[elems.front()].to_latex() << "\n";
    } else {
      os << table.latex_table();
    }
  } else if (single) {
    os << table[elems.front()].to_string() << "\n";
  } else {
    for (std::size_t k : elems) {
      std::string one_line;
      for (int v : (*group)[k].one_line()) one_line += std::to_string(v);
      os << one_line << "  " << show_word(group->word(k)) << ": " << table[k].to_string() << "\n";
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// selftest

ordered_json gkm_table_json(const WeylGroupPtr& group, const GKMConvention& conv) {
  const GKMSchubertTable table(group, conv);
  ordered_json j;
  j["group"] = group->root_system().name();
  j["convention"] = conv.to_json();
  ordered_json classes = ordered_json::array();
  for (std::size_t k = 0; k < group->size(); ++k) {
    ordered_json c;
    c["element"] = group->word(k);
    c["values"] = table[k].to_json();
    classes.push_back(std::move(c));
  }
  j["classes"] = std::move(classes);
  return j;
}

struct SelftestResult {
  std::vector<std::pair<std::string, ordered_json>> goldens;  // file name → content
  std::vector<std::pair<std::string, bool>> checks;
};

SelftestResult compute_selftest(std::ostream* progress) {
  SelftestResult res;
  auto note = [&](const std::string& s) {
    if (progress) *progress << "[selftest] " << s << "\n";
  };

  note("GKM convention search");
  const GKMConvention gkm = search_gkm_convention();

  note("convolution convention search");
  const SchubertTable s2(make_weyl_group(Family::A, 1));
  const DemazureActionSearch search = search_demazure_action(s2);
  if (!search.unique()) {
    throw ConventionError("convolution search found " + std::to_string(search.distinct) + " distinct conventions at n=2");
  }
  const DemazureConvention conv = *search.chosen;
  const SchubertTable s3(make_weyl_group(Family::A, 2));
  bool conv_n3 = true;
  for (const WeylElement& w : s3.group().elements()) conv_n3 = conv_n3 && verify_demazure_action(s3, conv, w).pass;
  res.checks.emplace_back("convolution convention holds at n=3", conv_n3);

  note("pullback sign");
  int nu = 0;
  bool nu_constant = true;
  for (int n = 2; n <= 4; ++n) {
    const SchubertTable t(make_weyl_group(Family::A, n - 1));
    for (const WeylElement& w : t.group().elements()) {
      const int s = nu_star_sign(t, w);
      if (nu == 0) nu = s;
      nu_constant = nu_constant && s == nu && s != 0;
    }
  }
  res.checks.emplace_back("pullback sign is uniform for n<=4", nu_constant);

  note("oracle cross-checks");
  bool agree = true;
  for (int n = 2; n <= 4; ++n) {
    const WeylGroupPtr g = make_weyl_group(Family::A, n - 1);
    agree = agree && agrees_with_polynomial_model(GKMSchubertTable(g, gkm), SchubertTable(g));
  }
  res.checks.emplace_back("GKM restrictions match localized polynomials for n<=4", agree);
  // Distinct Schubert classes stay apart in the quotient; multiples of
  // e1(x) - e1(t) vanish there. Both membership oracles must say so.
  bool oracles = true;
  for (int n = 2; n <= 3; ++n) {
    const WeylGroupPtr g = make_weyl_group(Family::A, n - 1);
    const SchubertTable t(g);
    Poly e1;
    for (int i = 1; i <= n; ++i) e1 += Poly::var(Block::X, i) - Poly::var(Block::T, i);
    for (std::size_t a = 0; a < g->size(); ++a) {
      for (std::size_t b = 0; b < g->size(); ++b) {
        const Poly d = t[a] - t[b];
        const bool expect = a == b;
        oracles = oracles && ideal_member(d, {IdealVariant::TwoBlock, g}) == expect &&
                  ideal_member(d, {IdealVariant::Split, g}) == expect;
      }
      const Poly m = t[a] * e1;
      oracles = oracles && ideal_member(m, {IdealVariant::TwoBlock, g}) && ideal_member(m, {IdealVariant::Split, g});
    }
  }
  res.checks.emplace_back("two-block and split oracles agree for n<=3", oracles);

  ordered_json conventions;
  conventions["gkm"] = gkm.to_json();
  conventions["convolution"] = conv.to_json();
  conventions["nu_star_sign"] = nu;
  res.goldens.emplace_back("conventions.json", std::move(conventions));
  res.goldens.emplace_back("gkm_A2.json", gkm_table_json(make_weyl_group(Family::A, 2), gkm));
  res.goldens.emplace_back("gkm_B2.json", gkm_table_json(make_weyl_group(Family::B, 2), gkm));
  return res;
}

int cmd_selftest(const fs::path& dir, bool regenerate, bool quiet, std::ostream& out, std::ostream& err) {
  const SelftestResult res = compute_selftest(quiet ? nullptr : &err);
  if (regenerate) {
    fs::create_directories(dir);
    for (const auto& [name, content] : res.goldens) {
      std::ofstream f(dir / name);
      if (!f) throw ConfigError("cannot write " + (dir / name).string());
      f << content.dump(2) << "\n";
      out << "wrote " << (dir / name).string() << "\n";
    }
  }
  bool pass = true;
  for (const auto& [name, ok] : res.checks) {
    out << (ok ? "PASS " : "FAIL ") << name << "\n";
    pass = pass && ok;
  }
  if (regenerate) return pass ? kExitPass : kExitFail;

  for (const auto& [name, content] : res.goldens) {
    const fs::path path = dir / name;
    std::ifstream f(path);
    if (!f) {
      err << "missing golden file " << path.string() << "; run `flagcalc selftest --regenerate` to create it\n";
      return kExitMissingGolden;
    }
    ordered_json golden;
    try {
      golden = ordered_json::parse(f);
    } catch (const nlohmann::json::parse_error& e) {
      out << "FAIL " << name << " is not valid JSON: " << e.what() << "\n";
      pass = false;
      continue;
    }
    if (golden == content) {
      out << "PASS " << name << " matches\n";
      continue;
    }
    pass = false;
    out << "FAIL " << name << " drifted:\n" << nlohmann::json::diff(golden, content).dump(2) << "\n";
  }
  return pass ? kExitPass : kExitFail;
}

void add_common(CLI::App* sub, RunConfig& c) {
  sub->add_option("--family", c.family_name, "A, B, C or D")->capture_default_str();
  sub->add_option("--rank", c.rank, "n for family A (the group S_n), the rank otherwise")->capture_default_str();
  sub->add_option("--element", c.element, "reduced word, comma-separated generator indices (\"\" is e)");
  sub->add_option("--perm", c.perm, "one-line permutation, family A only (\"231\" or \"2,3,1\")");
  sub->add_option("--format", c.format, "output format")
      ->check(CLI::IsMember({"text", "json", "latex"}))
      ->capture_default_str();
  sub->add_option("--output", c.output, "write results to this file instead of stdout");
  sub->add_option("--jobs", c.jobs, "worker threads (default: FLAGCALC_JOBS or the core count)");
  sub->add_flag("--allow-large", c.allow_large, "lift the default rank and sweep caps");
  sub->add_flag("--quiet", c.quiet, "no progress on stderr");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig c;
  std::string golden_dir = FLAGCALC_DEFAULT_GOLDEN_DIR;
  bool regenerate = false;

  CLI::App app{"Exact Schubert calculus on flag varieties"};
  app.name("flagcalc");
  app.require_subcommand(1);
  app.set_version_flag("--version", "flagcalc 1.0.0");

  CLI::App* poly = app.add_subcommand("poly", "print double Schubert polynomials or GKM restriction tables");
  add_common(poly, c);
  poly->add_flag("--gkm", c.gkm, "print localized classes (any family)");

  CLI::App* verify = app.add_subcommand("verify", "check an identity over the group");
  verify->add_option("identity", c.identity, "identity to check")->required()->check(CLI::IsMember(kIdentities));
  add_common(verify, c);
  verify->add_option("--seed", c.seed, "seed for the random samples")->capture_default_str();
  verify->add_option("--samples", c.samples, "random samples for total-leibniz and convolution")
      ->capture_default_str();
  verify->add_flag("--timing", c.timing, "report wall-clock time (makes output run-dependent)");

  CLI::App* selftest = app.add_subcommand("selftest", "rerun the convention searches and compare with the golden files");
  selftest->add_flag("--regenerate", regenerate, "rewrite the golden files");
  selftest->add_option("--golden-dir", golden_dir, "directory holding the golden files")->capture_default_str();
  selftest->add_flag("--quiet", c.quiet, "no progress on stderr");

  std::vector<std::string> argv_store;
  argv_store.reserve(args.size() + 1);
  argv_store.push_back("flagcalc");
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (std::string& s : argv_store) argv.push_back(s.data());

  try {
    c.jobs = default_jobs();
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  c.has_element = poly->count("--element") + verify->count("--element") > 0;
  c.has_perm = poly->count("--perm") + verify->count("--perm") > 0;

  try {
    if (selftest->parsed()) return cmd_selftest(golden_dir, regenerate, c.quiet, out, err);

    resolve(c);
    const WeylGroupPtr group = make_weyl_group(c.family, c.lie_rank);
    std::string text;
    int code = kExitPass;
    if (poly->parsed()) {
      text = render_poly(c, group);
    } else {
      const auto start = std::chrono::steady_clock::now();
      const std::vector<Report> reports = run_identity(c, group, c.quiet ? nullptr : &err);
      const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      text = render_verify(c, reports, seconds);
      for (const Report& r : reports) {
        if (!r.pass) code = kExitFail;
      }
      if (!c.quiet) err << "[" << c.identity << "] finished in " << seconds << " s\n";
    }
    if (c.output.empty()) {
      out << text;
    } else {
      std::ofstream f(c.output, std::ios::binary);
      if (!f) throw UsageError("cannot write " + c.output);
      f << text;
    }
    return code;
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << " (needs " << e.required() << ")\n";
    return kExitResource;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitFail;
  }
}

}  // namespace flagcalc
