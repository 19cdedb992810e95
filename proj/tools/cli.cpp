#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "ffhyper/admissible.hpp"
#include "ffhyper/bounds.hpp"
#include "ffhyper/error.hpp"
#include "ffhyper/hypergraph.hpp"
#include "ffhyper/parallel.hpp"
#include "ffhyper/parse.hpp"
#include "suite.hpp"

namespace ffhyper::cli {

using nlohmann::json;

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string join(const std::vector<std::string>& v, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
  return out;
}

std::string fmt_double(double x) {
  std::ostringstream os;
  os << std::setprecision(10) << x;
  return os.str();
}

FieldPtr single_field(const RunConfig& c) {
  if (c.fields.size() != 1) throw UsageError("expected exactly one --field");
  return Field::parse(c.fields.front());
}

MultiPoly paley_poly(const FieldPtr& F, std::size_t k) {
  MultiPoly f(F, k);
  for (std::size_t i = 0; i < k; ++i) f = f + MultiPoly::variable(F, k, i);
  return f;
}

MultiPoly single_poly(const RunConfig& c, const FieldPtr& F) {
  if (c.paley) {
    if (!c.polys.empty()) throw UsageError("--paley and --poly are exclusive");
    return paley_poly(F, c.k);
  }
  if (c.polys.size() != 1) throw UsageError("expected exactly one --poly");
  return parse_poly(F, c.polys.front());
}

CountOptions count_options(const RunConfig& c) { return {c.budget_tuples, c.workers}; }

HypergraphOptions graph_options(const RunConfig& c) { return {c.budget_mem * 8, c.workers}; }

json header(const RunConfig& c, const FieldPtr& F, const MultiPoly* f) {
  json j;
  j["schema"] = kSchema;
  j["command"] = c.command;
  j["field"] = F->spec();
  j["q"] = F->q();
  if (f) {
    j["poly"] = f->to_string();
    j["k"] = f->nvars();
    j["d"] = f->total_degree();
  }
  return j;
}

std::string csv(const std::string& command, const std::vector<std::string>& columns,
                const std::vector<std::vector<std::string>>& rows) {
  std::string out = "# ffhyper " + command + " csv v1\n" + join(columns, ",") + "\n";
  for (const auto& r : rows) out += join(r, ",") + "\n";
  return out;
}

std::string quote(const std::string& s) { return "\"" + s + "\""; }

CommandResult emit(const RunConfig& c, const json& j, const std::string& csv_text, int code = kOk) {
  return {code, c.format == "csv" ? csv_text : j.dump(2) + "\n"};
}

// Commands

CommandResult cmd_admissible(const RunConfig& c) {
  const auto F = single_field(c);
  const auto f = single_poly(c, F);
  const auto v = is_admissible(f);
  json j = header(c, F, &f);
  j["verdict"] = v.to_json();
  return emit(c, j,
              csv("admissible", {"q", "k", "d", "poly", "status"},
                  {{std::to_string(F->q()), std::to_string(v.k), std::to_string(v.degree), quote(f.to_string()),
                    std::string(to_string(v.status))}}));
}

CommandResult cmd_epo(const RunConfig& c) {
  const auto F = single_field(c);
  const auto f = single_poly(c, F);
  if (c.method != "direct" && c.method != "charsum" && c.method != "both") {
    throw UsageError("--method must be direct, charsum or both");
  }
  const auto y = Hypergraph::build(f, graph_options(c));
  const auto opts = count_options(c);
  json j = header(c, F, &f);
  std::vector<std::vector<std::string>> rows;
  const std::string q = std::to_string(F->q()), k = std::to_string(f.nvars()), d = std::to_string(f.total_degree());
  std::optional<CountReport> direct;
  std::optional<CharsumReport> cs;
  if (c.method != "charsum") {
    direct = count_epo_direct(y, opts);
    j["direct"] = direct->to_json();
    rows.push_back({q, k, d, "direct", direct->observed.str(), to_decimal(direct->predicted_main, 17),
                    to_decimal(direct->deviation, 17), fmt_double(direct->relative_deviation)});
  }
  if (c.method != "direct") {
    cs = count_epo_charsum(y, CharsumMethod::factored, opts);
    j["charsum"] = cs->to_json();
    const Rational pred(pow(BigInt(F->q()), static_cast<unsigned>(2 * f.nvars())), 2);
    const Rational dev = cs->estimate - pred;
    rows.push_back({q, k, d, "charsum", to_decimal(cs->estimate, 17), to_decimal(pred, 17), to_decimal(dev, 17),
                    fmt_double(static_cast<double>(dev / pred))});
  }
  int code = kOk;
  if (direct && cs) {
    // |estimate - observed| <= (2^{k+1} d + C(2k,2)) q^{2k-1}
    const std::size_t kk = f.nvars();
    const BigInt bound = (BigInt(2) * (BigInt(1) << kk) * f.total_degree() + BigInt(kk) * (2 * kk - 1)) *
                         pow(BigInt(F->q()), static_cast<unsigned>(2 * kk - 1));
    const Rational gap = abs(cs->estimate - Rational(direct->observed));
    const bool agree = gap <= Rational(bound);
    j["agreement"] = {{"gap", rational_json(gap)}, {"bound", bound.str()}, {"pass", agree}};
    if (!agree) code = kCheckFailed;
  }
  return emit(c, j,
              csv("epo", {"q", "k", "d", "method", "observed", "predicted", "deviation", "relative"}, rows), code);
}

CommandResult cmd_tuples(const RunConfig& c) {
  const auto F = single_field(c);
  const auto f = single_poly(c, F);
  const std::size_t m = c.m.value_or(f.nvars() + 1);
  if (m < f.nvars()) throw UsageError("--m must be at least k");
  const auto y = Hypergraph::build(f, graph_options(c));
  const auto opts = count_options(c);
  const auto r = count_m_subsets(y, m, opts);
  json j = header(c, F, &f);
  j["m"] = m;
  j["count"] = r.to_json();
  j["within_envelope"] = r.within_envelope();
  std::vector<std::vector<std::string>> rows{{std::to_string(F->q()), std::to_string(f.nvars()),
                                              std::to_string(f.total_degree()), std::to_string(m), "subsets",
                                              r.observed.str(), to_decimal(r.predicted_main, 17),
                                              to_decimal(r.deviation, 17), fmt_double(r.relative_deviation)}};
  if (c.s) {
    // Labeled copies of the complete k-graph on s vertices.
    Pattern p{*c.s, f.nvars(), {}};
    std::vector<std::size_t> e(f.nvars());
    std::vector<bool> pick(*c.s, false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(std::min(*c.s, f.nvars())), true);
    do {
      e.clear();
      for (std::size_t i = 0; i < *c.s; ++i) {
        if (pick[i]) e.push_back(i);
      }
      if (e.size() == f.nvars()) p.edges.push_back(e);
    } while (std::prev_permutation(pick.begin(), pick.end()));
    std::sort(p.edges.begin(), p.edges.end());
    const auto ind = count_labeled_induced(y, p, opts);
    j["induced_complete"] = ind.to_json();
    j["s"] = *c.s;
    rows.push_back({std::to_string(F->q()), std::to_string(f.nvars()), std::to_string(f.total_degree()),
                    std::to_string(*c.s), "induced_complete", ind.observed.str(), to_decimal(ind.predicted_main, 17),
                    to_decimal(ind.deviation, 17), fmt_double(ind.relative_deviation)});
  }
  return emit(c, j,
              csv("tuples", {"q", "k", "d", "m", "kind", "observed", "predicted", "deviation", "relative"}, rows));
}

CommandResult cmd_clique(const RunConfig& c) {
  const auto F = single_field(c);
  const auto f = single_poly(c, F);
  const auto y = Hypergraph::build(f, graph_options(c));
  const auto r = omega_clique(y, c.budget_nodes);
  json j = header(c, F, &f);
  json members = json::array();
  for (Elem x : r.clique) members.push_back(F->format(x));
  j["omega"] = r.size;
  j["exact"] = r.exact;
  j["clique"] = members;
  j["nodes"] = r.nodes;
  return emit(c, j,
              csv("clique", {"q", "k", "d", "omega", "exact"},
                  {{std::to_string(F->q()), std::to_string(f.nvars()), std::to_string(f.total_degree()),
                    std::to_string(r.size), r.exact ? "true" : "false"}}));
}

CommandResult cmd_weil(const RunConfig& c) {
  const auto F = single_field(c);
  if (c.polys.size() != 1) throw UsageError("expected exactly one --poly (univariate in x1)");
  const auto g = to_unipoly(parse_poly(F, c.polys.front(), 1));
  const auto a = parse_poly(F, c.a, 1);
  if (!a.is_constant()) throw UsageError("--a must be a constant");
  const auto w = weil_check(g, a.constant_value());
  json j = header(c, F, nullptr);
  j["g"] = g.to_string("x1");
  j["a"] = F->format(a.constant_value());
  j["check"] = w.to_json();
  return emit(c, j,
              csv("weil", {"q", "g", "a", "sum", "s", "applicable", "pass"},
                  {{std::to_string(F->q()), quote(g.to_string("x1")), F->format(a.constant_value()),
                    std::to_string(w.sum), std::to_string(w.s), w.applicable ? "true" : "false",
                    w.pass() ? "true" : "false"}}),
              w.pass() ? kOk : kCheckFailed);
}

CommandResult cmd_xset(const RunConfig& c) {
  const auto F = single_field(c);
  const auto f = single_poly(c, F);
  const auto x = enumerate_X(f, false, count_options(c));
  json j = header(c, F, &f);
  j["x"] = x.to_json();
  json members = json::array();
  for (const auto& u : x.members) {
    json t = json::array();
    for (Elem e : u) t.push_back(F->format(e));
    members.push_back(t);
  }
  j["members"] = members;
  return emit(c, j,
              csv("xset", {"q", "k", "d", "size", "y", "z", "constant_members", "bound", "pass"},
                  {{std::to_string(F->q()), std::to_string(f.nvars()), std::to_string(f.total_degree()),
                    std::to_string(x.size()), std::to_string(x.y_count), std::to_string(x.z_count),
                    std::to_string(x.constant_members), x.bound.str(), x.pass() ? "true" : "false"}}),
              x.pass() ? kOk : kCheckFailed);
}

CommandResult cmd_bset(const RunConfig& c) {
  const auto F = single_field(c);
  const auto f = single_poly(c, F);
  const auto b = enumerate_B(f, count_options(c));
  json j = header(c, F, &f);
  j["size"] = b.size();
  j["bound"] = b.bound.str();
  j["pass"] = b.pass();
  return emit(c, j,
              csv("bset", {"q", "k", "d", "size", "bound", "pass"},
                  {{std::to_string(F->q()), std::to_string(f.nvars()), std::to_string(f.total_degree()),
                    std::to_string(b.size()), b.bound.str(), b.pass() ? "true" : "false"}}));
}

CommandResult cmd_slavov(const RunConfig& c) {
  const auto F = single_field(c);
  if (c.polys.empty()) throw UsageError("expected at least one --poly");
  std::size_t m = 1;
  for (const auto& text : c.polys) m = std::max(m, parse_poly(F, text).nvars());
  std::vector<MultiPoly> fs;
  for (const auto& text : c.polys) fs.push_back(parse_poly(F, text, m));
  const auto r = slavov_count(fs, true, count_options(c));
  json j = header(c, F, nullptr);
  json polys = json::array();
  for (const auto& f : fs) polys.push_back(f.to_string());
  j["polys"] = polys;
  j["m"] = m;
  j["count"] = r.report.to_json();
  j["condition_holds"] = r.condition_holds();
  j["failing_subsets"] = r.failing_subsets;
  return emit(c, j,
              csv("slavov", {"q", "n", "m", "observed", "predicted", "deviation", "condition_holds"},
                  {{std::to_string(F->q()), std::to_string(fs.size()), std::to_string(m), r.report.observed.str(),
                    to_decimal(r.report.predicted_main, 17), to_decimal(r.report.deviation, 17),
                    r.condition_holds() ? "true" : "false"}}),
              r.condition_holds() ? kOk : kCheckFailed);
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

CommandResult cmd_scan(const RunConfig& c) {
  if (c.fields.empty()) throw UsageError("expected at least one --field");
  if (c.k < 2) throw UsageError("--k must be at least 2");
  const std::size_t k = c.k;
  const std::size_t m = c.m.value_or(k + 1);
  if (m < k) throw UsageError("--m must be at least k");
  std::vector<FieldPtr> fields;
  for (const auto& spec : c.fields) fields.push_back(Field::parse(spec));

  struct Job {
    FieldPtr F;
    std::size_t sample;
  };
  std::vector<Job> jobs;
  for (const auto& F : fields) {
    for (std::size_t i = 0; i < c.samples; ++i) jobs.push_back({F, i});
  }
  const CountOptions inner{c.budget_tuples, 1};
  const auto rows = parallel_map<std::vector<std::string>>(jobs.size(), c.workers, [&](std::size_t idx) {
    const auto& job = jobs[idx];
    const std::uint64_t seed = splitmix64(c.seed ^ splitmix64(job.F->q() * 0x100000001b3ull + job.sample));
    const auto f = random_symmetric_poly(job.F, k, c.d, seed);
    const auto v = is_admissible(f, 0);
    std::vector<std::string> row{std::to_string(job.F->q()), std::to_string(k),           std::to_string(c.d),
                                 std::to_string(job.sample), quote(f.to_string()),         std::string(to_string(v.status)),
                                 v.admissible() ? "1" : "0"};
    if (!v.admissible()) {
      row.insert(row.end(), 6, "");
      return row;
    }
    const auto y = Hypergraph::build(f, {c.budget_mem * 8, 1});
    const auto epo = count_epo_direct(y, inner);
    const auto tup = count_m_subsets(y, m, inner);
    row.insert(row.end(), {epo.observed.str(), to_decimal(epo.predicted_main, 17), fmt_double(epo.relative_deviation),
                           tup.observed.str(), to_decimal(tup.predicted_main, 17), fmt_double(tup.relative_deviation)});
    return row;
  });
  const std::vector<std::string> columns{"q",          "k",           "d",          "sample",        "poly",
                                         "status",     "admissible",  "epo_obs",    "epo_pred",      "epo_rel",
                                         "tuples_obs", "tuples_pred", "tuples_rel"};
  if (c.format == "json") {
    json j;
    j["schema"] = kSchema;
    j["command"] = "scan";
    j["seed"] = c.seed;
    j["m"] = m;
    j["rows"] = json::array();
    for (const auto& r : rows) {
      json o;
      for (std::size_t i = 0; i < columns.size(); ++i) o[columns[i]] = r[i];
      j["rows"].push_back(o);
    }
    return {kOk, j.dump(2) + "\n"};
  }
  return {kOk, csv("scan", columns, rows)};
}

CommandResult cmd_verify(const RunConfig& c) {
  SuiteOptions opts;
  opts.only = c.only;
  opts.workers = c.workers;
  const auto report = run_suite(opts);
  const bool pass = report.at("pass").get<bool>();
  std::vector<std::vector<std::string>> rows;
  for (const auto& chk : report.at("checks")) {
    rows.push_back({chk.at("name").get<std::string>(), chk.at("group").get<std::string>(),
                    chk.at("pass").get<bool>() ? "true" : "false", fmt_double(chk.at("seconds").get<double>())});
  }
  return emit(c, report, csv("verify", {"name", "group", "pass", "seconds"}, rows), pass ? kOk : kCheckFailed);
}

// FNV-1a, 64 bit.
std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string canonical_poly(const RunConfig& c, const std::string& text) {
  // Canonical print when the field parses; otherwise the raw text (errors are not cached).
  try {
    if (c.fields.size() == 1) return parse_poly(Field::parse(c.fields.front()), text).to_string();
  } catch (const Error&) {
  }
  return text;
}

std::string canonical_field(const std::string& spec) {
  try {
    return Field::parse(spec)->spec();
  } catch (const Error&) {
    return spec;
  }
}

}  // namespace

std::string RunConfig::cache_key_text() const {
  std::ostringstream os;
  os << kVersion << '|' << command << "|fields=";
  for (const auto& f : fields) os << canonical_field(f) << ';';
  os << "|polys=";
  for (const auto& p : polys) os << canonical_poly(*this, p) << ';';
  os << "|k=" << k << "|m=" << (m ? std::to_string(*m) : "-") << "|s=" << (s ? std::to_string(*s) : "-")
     << "|d=" << d << "|seed=" << seed << "|budget_tuples=" << budget_tuples << "|budget_mem=" << budget_mem
     << "|budget_nodes=" << budget_nodes << "|format=" << format << "|method=" << method << "|paley=" << paley
     << "|only=" << join(only, ",") << "|samples=" << samples << "|a=" << a;
  return os.str();
}

std::string cache_key(const RunConfig& config) {
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << fnv1a(config.cache_key_text());
  return os.str();
}

namespace {

std::string stamp() { return std::string("# ") + kVersion + "\n"; }

}  // namespace

std::optional<std::string> cache_load(const std::string& dir, const std::string& key) {
  std::ifstream in(std::filesystem::path(dir) / (key + ".out"), std::ios::binary);
  if (!in) return std::nullopt;
  std::string line;
  if (!std::getline(in, line) || line + "\n" != stamp()) return std::nullopt;
  std::ostringstream rest;
  rest << in.rdbuf();
  return rest.str();
}

void cache_store(const std::string& dir, const std::string& key, const std::string& output) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  const auto final_path = std::filesystem::path(dir) / (key + ".out");
  const auto tmp = std::filesystem::path(dir) / (key + ".tmp");
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) return;
    out << stamp() << output;
  }
  std::filesystem::rename(tmp, final_path, ec);
}

CommandResult execute(const RunConfig& c) {
  if (c.format != "json" && c.format != "csv") throw UsageError("--format must be json or csv");
  if (c.budget_tuples == 0 || c.budget_mem == 0) throw UsageError("budgets must be positive");
  if (c.command == "admissible") return cmd_admissible(c);
  if (c.command == "epo") return cmd_epo(c);
  if (c.command == "tuples") return cmd_tuples(c);
  if (c.command == "clique") return cmd_clique(c);
  if (c.command == "weil") return cmd_weil(c);
  if (c.command == "xset") return cmd_xset(c);
  if (c.command == "bset") return cmd_bset(c);
  if (c.command == "slavov") return cmd_slavov(c);
  if (c.command == "scan") return cmd_scan(c);
  if (c.command == "verify") return cmd_verify(c);
  throw UsageError("unknown command '" + c.command + "'");
}

namespace {

void add_common(CLI::App* sub, RunConfig& c) {
  sub->add_option("--field", c.fields, "Field: p, p^n or p^n:c0,...,1 (repeatable for scan)");
  sub->add_option("--poly", c.polys, "Polynomial in x1..xk (repeatable for slavov)");
  sub->add_option("--k", c.k, "Uniformity for --paley and scan");
  sub->add_option("--m", c.m, "Subset size");
  sub->add_option("--s", c.s, "Pattern size for labeled induced counts");
  sub->add_option("--d", c.d, "Degree of random polynomials");
  sub->add_option("--seed", c.seed, "Random seed");
  sub->add_option("--workers", c.workers, "Worker threads (0 = all cores)");
  sub->add_option("--budget-tuples", c.budget_tuples, "Maximum tuples an exhaustive loop may visit");
  sub->add_option("--budget-mem", c.budget_mem, "Maximum bytes for the edge bitset");
  sub->add_option("--budget-nodes", c.budget_nodes, "Maximum clique search nodes");
  sub->add_option("--format", c.format, "json or csv");
  sub->add_option("--out", c.out, "Output file (default stdout)");
  sub->add_option("--cache-dir", c.cache_dir, "Result cache directory");
  sub->add_option("--method", c.method, "EPO method: direct, charsum or both");
  sub->add_flag("--paley", c.paley, "Use f = x1+...+xk");
  sub->add_option("--only", c.only, "verify: run only checks whose name or group contains this text");
  sub->add_option("--samples", c.samples, "scan: random polynomials per field");
  sub->add_option("--a", c.a, "weil: the multiplier a");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig c;
  CLI::App app{"Hypergraphs of symmetric polynomials over finite fields"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  const std::vector<std::pair<const char*, const char*>> commands{
      {"admissible", "Decide admissibility of a symmetric polynomial"},
      {"epo", "Count even partial octahedra"},
      {"tuples", "Count f-Diophantine m-subsets"},
      {"clique", "Clique number"},
      {"weil", "Character sum against the Weil bound"},
      {"xset", "Exceptional set X"},
      {"bset", "Exceptional set B"},
      {"slavov", "Joint nonzero-square count"},
      {"scan", "Sweep random symmetric polynomials over fields"},
      {"verify", "Run the verification suite"},
  };
  for (const auto& [name, help] : commands) add_common(app.add_subcommand(name, help), c);
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }
  c.command = app.get_subcommands().front()->get_name();
  if (const char* env = std::getenv("FFHYPER_CACHE_DIR"); env && *env) c.cache_dir = env;

  CommandResult result;
  try {
    // verify reports timings, so its output is never reused
    const bool cacheable = !c.cache_dir.empty() && c.command != "verify";
    const std::string key = cacheable ? cache_key(c) : std::string();
    std::optional<std::string> cached;
    if (!key.empty()) cached = cache_load(c.cache_dir, key);
    if (cached) {
      result = {kOk, *cached};
    } else {
      result = execute(c);
      if (!key.empty() && result.exit_code == kOk) cache_store(c.cache_dir, key, result.output);
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::BudgetExceeded ? kBudget : kUsage;
  }
  if (c.out.empty()) {
    out << result.output;
  } else {
    std::ofstream file(c.out, std::ios::binary);
    if (!file) {
      err << "error: cannot write " << c.out << "\n";
      return kUsage;
    }
    file << result.output;
  }
  return result.exit_code;
}

}  // namespace ffhyper::cli
