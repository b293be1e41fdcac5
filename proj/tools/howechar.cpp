// howechar: command-line front end.  JSON on stdout, errors on stderr.
//   exit 0  ok
//   exit 1  domain error (the error name is the first word on stderr)
//   exit 2  bad command line

#include <CLI11.hpp>
#include <cctype>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "howechar/error.hpp"
#include "howechar/howe.hpp"
#include "howechar/orbits.hpp"
#include "howechar/thetachar.hpp"
#include "howechar/verify.hpp"
#include "howechar/weylchar.hpp"

using json = nlohmann::ordered_json;
using namespace howechar;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// U+2212 MINUS SIGN is accepted wherever '-' is.
std::string ascii_minus(std::string s) {
  const std::string minus = "\xE2\x88\x92";
  for (std::size_t at; (at = s.find(minus)) != std::string::npos;) s.replace(at, minus.size(), "-");
  return s;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    const auto b = item.find_first_not_of(" \t"), e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw UsageError("empty entry in list '" + text + "'");
    out.push_back(item.substr(b, e - b + 1));
  }
  if (out.empty()) throw UsageError("empty list");
  return out;
}

std::vector<double> parse_doubles(const std::string& text) {
  std::vector<double> out;
  for (const auto& s : split_list(text)) {
    std::size_t used = 0;
    double v = 0;
    try {
      v = std::stod(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != s.size()) throw UsageError("not a number: '" + s + "'");
    out.push_back(v);
  }
  return out;
}

// Integers, halves, or "a/b" with b | 2.
Weight parse_weight(const std::string& text) {
  std::vector<Rational> v;
  for (const auto& s : split_list(text)) {
    try {
      v.push_back(parse_rational(s));
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
  }
  try {
    return Weight::from_rationals(v);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

json weight_json(const Weight& w) {
  json a = json::array();
  for (auto c : w) {
    if (c.is_integer())
      a.push_back(c.integer());
    else
      a.push_back(to_string(c));
  }
  return a;
}

json complex_json(Complex z) { return {{"re", z.real()}, {"im", z.imag()}}; }

json point_json(const TorusPoint& t) {
  json a = json::array();
  for (double x : t.angles()) a.push_back(x);
  return a;
}

struct Options {
  // pair
  std::string pair = "uu";
  int n = 1, p = 1, q = 1;
  std::optional<int> m, split;
  std::string nu = "0";
  // points
  std::string theta;
  int random_regular = 0;
  std::uint64_t seed = 1;
  // misc
  std::string family = "A";
  int rank = 1;
  std::string lambda;
  std::string x;
  std::int64_t lambda1 = 0;
  int k = 0;
  std::string mode = "grid";
  std::string method = "hciz";
  int samples = 20;
  std::uint64_t mc_samples = 1000000;
  int depth = 40;
  bool normalize = false;
  bool quick = false;
  int check = 0;
  std::string format = "json";
};

struct Job {
  json meta = json::object();
  json results = json::array();
  json warnings = json::array();
  bool failed = false;  // verify only
};

DualPairSpec make_pair(const Options& o) {
  PairKind kind;
  try {
    kind = parse_pair_kind(o.pair);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  switch (kind) {
    case PairKind::UU: return DualPairSpec::uu(o.n, o.p, o.q);
    case PairKind::OevenSp: break;
    case PairKind::OoddSp: break;
    case PairKind::UHOstar: break;
  }
  if (!o.m) throw UsageError("--m (the size of the second member) is required for " + o.pair);
  if (kind == PairKind::OevenSp) return DualPairSpec::oeven_sp(o.n, *o.m);
  if (kind == PairKind::OoddSp) return DualPairSpec::oodd_sp(o.n, *o.m);
  return DualPairSpec::uh_ostar(o.n, *o.m);
}

// For UU, --m is the embedding parameter; elsewhere it is a size and --split
// is the only way to name one.
std::optional<int> split_of(const Options& o, const DualPairSpec& pair) {
  if (o.split) return o.split;
  if (pair.kind == PairKind::UU) return o.m;
  return std::nullopt;
}

std::vector<TorusPoint> points(const Options& o, std::span<const Weight> roots, std::size_t rank) {
  if (!o.theta.empty() && o.random_regular > 0) throw UsageError("give --theta or --random-regular, not both");
  if (!o.theta.empty()) {
    auto v = parse_doubles(o.theta);
    if (v.size() != rank)
      throw UsageError("--theta needs " + std::to_string(rank) + " angles, got " + std::to_string(v.size()));
    return {TorusPoint(v)};
  }
  if (o.random_regular > 0) return random_regular_points(roots, rank, o.random_regular, o.seed);
  throw UsageError("give --theta or --random-regular COUNT");
}

void pair_meta(Job& job, const DualPairSpec& pair, const Weight& nu, std::optional<int> split, const Options& o) {
  job.meta["pair"] = pair.name();
  job.meta["nu"] = weight_json(nu);
  job.meta["m"] = split ? json(*split) : json("auto");
  job.meta["seed"] = o.seed;
}

ThetaCharacter build_theta(Job& job, const Options& o, const Weight& nu, const DualPairSpec& pair) {
  ThetaCharacter tc(pair, nu, split_of(o, pair));
  job.meta["m"] = tc.split();
  if (o.normalize) {
    const KTypeExpansion k = ktype_expansion(tc, HalfInteger(o.depth), false);
    tc.set_normalization(k.constant);
    job.meta["constant"] = to_string(k.constant);
  } else {
    job.meta["constant"] = 1;
    job.warnings.push_back("values are up to a global constant; pass --normalize to fix it");
  }
  return tc;
}

void run_theta(Job& job, const Options& o, bool numerator_form) {
  const DualPairSpec pair = make_pair(o);
  const Weight nu = parse_weight(o.nu);
  pair_meta(job, pair, nu, split_of(o, pair), o);
  const ThetaCharacter tc = build_theta(job, o, nu, pair);
  const RootSystem gp = pair.gprime_roots();
  if (numerator_form && o.theta.empty() && o.random_regular == 0) {
    for (const auto& [e, c] : numerator_series(tc).by_pairing())
      job.results.push_back({{"exponent", weight_json(e)}, {"coefficient", to_string(c)}});
    return;
  }
  for (const auto& t : points(o, gp.positive_roots(), gp.rank())) {
    const Complex v = numerator_form ? theta_numerator_form(tc, t) : theta_eval(tc, t);
    job.results.push_back({{"point", point_json(t)}, {"value", complex_json(v)}});
  }
}

void run(const std::string& cmd, const Options& o, Job& job) {
  if (cmd == "roots" || cmd == "rho") {
    Family f;
    try {
      f = parse_family(o.family);
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
    const RootSystem rs = build_root_system(f, o.rank);
    job.meta["family"] = to_string(f);
    job.meta["rank"] = o.rank;
    if (cmd == "roots")
      for (const auto& a : rs.positive_roots()) job.results.push_back({{"root", weight_json(a)}});
    else
      job.results.push_back({{"rho", weight_json(rho(rs))}});
    return;
  }
  if (cmd == "char" || cmd == "dim") {
    Family f;
    try {
      f = parse_family(o.family);
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
    if (o.lambda.empty()) throw UsageError("--lambda is required");
    const Weight lam = parse_weight(o.lambda);
    const RootSystem rs = build_root_system(f, o.rank);
    job.meta["family"] = to_string(f);
    job.meta["rank"] = o.rank;
    job.meta["lambda"] = weight_json(lam);
    if (cmd == "dim") {
      job.results.push_back({{"dimension", weyl_dimension(rs, lam)}});
      return;
    }
    job.meta["seed"] = o.seed;
    for (const auto& t : points(o, rs.positive_roots(), rs.rank()))
      job.results.push_back({{"point", point_json(t)}, {"value", complex_json(weyl_character(rs, lam, t))}});
    return;
  }
  if (cmd == "theta") return run_theta(job, o, false);
  if (cmd == "numerator") return run_theta(job, o, true);
  if (cmd == "theta-closed-u1") {
    const int split = o.m.value_or(1);
    job.meta["pair"] = DualPairSpec::uu(1, o.p, o.q).name();
    job.meta["lambda1"] = o.lambda1;
    job.meta["m"] = split;
    job.meta["seed"] = o.seed;
    const RootSystem gp = DualPairSpec::uu(1, o.p, o.q).gprime_roots();
    for (const auto& t : points(o, gp.positive_roots(), gp.rank()))
      job.results.push_back(
          {{"point", point_json(t)}, {"value", complex_json(theta_u1_closed(o.p, o.q, o.lambda1, split, t))}});
    return;
  }
  if (cmd == "support") {
    const DualPairSpec pair = make_pair(o);
    const Weight nu = parse_weight(o.nu);
    pair_meta(job, pair, nu, split_of(o, pair), o);
    const auto cd = validate_weight(pair, nu);
    const auto iv = support_interval(pair, cd);
    json a = json::array(), b = json::array(), splits = json::array();
    for (const auto& v : iv.a) a.push_back(to_string(v));
    for (const auto& v : iv.b) b.push_back(to_string(v));
    try {
      for (int s : admissible_splits(pair, iv)) splits.push_back(s);
    } catch (const OutsideSupport& e) {
      job.warnings.push_back(e.what());
    }
    job.results.push_back({{"lo", iv.lo},
                           {"hi", iv.hi},
                           {"a", a},
                           {"b", b},
                           {"mu_prime", weight_json(cd.mu_prime)},
                           {"admissible", splits}});
    return;
  }
  if (cmd == "constant" || cmd == "ktypes") {
    const DualPairSpec pair = make_pair(o);
    const Weight nu = parse_weight(o.nu);
    pair_meta(job, pair, nu, split_of(o, pair), o);
    const ThetaCharacter tc(pair, nu, split_of(o, pair));
    job.meta["m"] = tc.split();
    job.meta["depth"] = o.depth;
    if (cmd == "constant" && !o.lambda.empty()) {
      const Weight lam = parse_weight(o.lambda);
      job.results.push_back(
          {{"lambda", weight_json(lam)}, {"constant", to_string(normalizing_constant(tc, lam, HalfInteger(o.depth)))}});
      return;
    }
    const KTypeExpansion k = ktype_expansion(tc, HalfInteger(o.depth));
    if (cmd == "constant") {
      job.results.push_back({{"lambda", weight_json(k.minimal)}, {"constant", to_string(k.constant)}});
      return;
    }
    job.meta["minimal"] = weight_json(k.minimal);
    job.meta["constant"] = to_string(k.constant);
    for (const auto& [g, mult] : k.multiplicities)
      job.results.push_back({{"ktype", weight_json(g)}, {"multiplicity", mult}});
    return;
  }
  if (cmd == "identity") {
    IdentityMode mode;
    if (o.mode == "grid")
      mode = IdentityMode::grid;
    else if (o.mode == "random" || o.mode == "random-rational")
      mode = IdentityMode::random_rational;
    else
      throw UsageError("--mode must be grid or random");
    job.meta["p"] = o.p;
    job.meta["q"] = o.q;
    job.meta["k"] = o.k;
    job.meta["mode"] = o.mode;
    job.meta["seed"] = o.seed;
    const auto rep = vandermonde_identity_check(o.p, o.q, o.k, mode, o.seed, o.samples);
    json r = {{"verdict", to_string(rep.verdict)}, {"points", rep.points}};
    if (rep.lhs) r["lhs"] = to_string(*rep.lhs);
    if (rep.rhs) r["rhs"] = to_string(*rep.rhs);
    job.results.push_back(r);
    return;
  }
  if (cmd == "rdv" || cmd == "oracle") {
    if (o.lambda.empty()) throw UsageError("--lambda is required");
    const Weight lam = parse_weight(o.lambda);
    const int n = static_cast<int>(lam.size());
    const RootSystem rs = build_root_system(Family::A, n);
    job.meta["group"] = "U(" + std::to_string(n) + ")";
    job.meta["lambda"] = weight_json(lam);
    job.meta["seed"] = o.seed;
    std::vector<TorusPoint> xs;
    if (!o.x.empty()) {
      auto v = parse_doubles(o.x);
      if (v.size() != lam.size()) throw UsageError("--x needs " + std::to_string(n) + " entries");
      xs.push_back(TorusPoint(v));
    } else {
      xs = points(o, rs.positive_roots(), n);
    }
    const OrbitParameter op(rs, lam);
    std::vector<double> ld;
    for (auto c : lam) ld.push_back(c.to_double());
    if (cmd == "oracle") job.meta["method"] = o.method;
    for (const auto& x : xs) {
      json r = {{"point", point_json(x)}};
      if (cmd == "rdv") {
        r["value"] = complex_json(rdv_fourier(rs, op, x.angles()));
      } else if (o.method == "hciz") {
        r["value"] = complex_json(hciz_oracle(ld, x.angles()));
      } else if (o.method == "mc") {
        const auto est = orbit_integral_monte_carlo(ld, x.angles(), o.mc_samples, o.seed);
        r["value"] = complex_json(est.value);
        r["standard_error"] = est.standard_error;
        r["samples"] = est.samples;
      } else {
        throw UsageError("--method must be hciz or mc");
      }
      job.results.push_back(r);
    }
    return;
  }
  if (cmd == "verify") {
    VerifyOptions vo;
    vo.quick = o.quick;
    vo.seed = o.seed;
    job.meta["quick"] = o.quick;
    job.meta["seed"] = o.seed;
    std::vector<CheckResult> rs;
    if (o.check)
      rs.push_back(run_check(o.check, vo));
    else
      rs = run_all_checks(vo);
    for (const auto& r : rs) {
      job.results.push_back({{"id", r.id}, {"title", r.title}, {"passed", r.passed}, {"detail", r.detail}});
      if (!r.passed) job.failed = true;
    }
    return;
  }
  throw UsageError("unknown subcommand " + cmd);
}

std::string scalar(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_object() && v.contains("re")) {
    std::ostringstream s;
    s.precision(12);
    s << v["re"].get<double>() << (v["im"].get<double>() < 0 ? " - " : " + ") << std::abs(v["im"].get<double>())
      << "i";
    return s.str();
  }
  return v.dump();
}

void print_table(const Job& job) {
  for (const auto& [k, v] : job.meta.items()) std::cout << "# " << k << ": " << scalar(v) << "\n";
  for (const auto& r : job.results) {
    bool first = true;
    for (const auto& [k, v] : r.items()) {
      std::cout << (first ? "" : "\t") << k << "=" << scalar(v);
      first = false;
    }
    std::cout << "\n";
  }
  for (const auto& w : job.warnings) std::cout << "# warning: " << w.get<std::string>() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  // "--theta -1.5,2" would read as an option; glue negative values on.
  std::vector<std::string> forward;
  for (int i = 1; i < argc; ++i) {
    std::string a = ascii_minus(argv[i]);
    const bool negative = a.size() > 1 && a[0] == '-' && (std::isdigit(static_cast<unsigned char>(a[1])) || a[1] == '.');
    if (negative && !forward.empty() && forward.back().starts_with("--") &&
        forward.back().find('=') == std::string::npos)
      forward.back() += "=" + a;
    else
      forward.push_back(a);
  }
  std::vector<std::string> args(forward.rbegin(), forward.rend());

  CLI::App app{"Characters of representations in compact dual pairs"};
  app.require_subcommand(1);
  Options o;

  auto pair_opts = [&](CLI::App* s) {
    s->add_option("--pair", o.pair, "uu, oeven-sp, oodd-sp, uh-ostar");
    s->add_option("--n", o.n, "rank of the compact member");
    s->add_option("--p", o.p);
    s->add_option("--q", o.q);
    s->add_option("--m", o.m, "UU: embedding parameter; other pairs: size of the second member");
    s->add_option("--split", o.split, "embedding parameter (any pair)");
    s->add_option("--nu", o.nu, "highest weight, comma separated; a/b accepted");
  };
  auto point_opts = [&](CLI::App* s) {
    s->add_option("--theta", o.theta, "angles in radians, comma separated");
    s->add_option("--random-regular", o.random_regular, "number of random regular points");
  };

  std::vector<std::pair<std::string, CLI::App*>> subs;
  auto sub = [&](const std::string& name, const std::string& help) {
    CLI::App* s = app.add_subcommand(name, help);
    s->add_option("--seed", o.seed);
    s->add_option("--format", o.format)->check(CLI::IsMember({"json", "table"}));
    subs.push_back({name, s});
    return s;
  };

  for (const char* name : {"roots", "rho"}) {
    auto* s = sub(name, name == std::string("roots") ? "positive roots" : "half sum of positive roots");
    s->add_option("--family", o.family)->required();
    s->add_option("--rank", o.rank)->required();
  }
  for (const char* name : {"char", "dim"}) {
    auto* s = sub(name, name == std::string("char") ? "Weyl character at torus points" : "Weyl dimension");
    s->add_option("--family", o.family);
    s->add_option("--rank", o.rank)->required();
    s->add_option("--lambda", o.lambda)->required();
    if (name == std::string("char")) point_opts(s);
  }
  for (const char* name : {"theta", "numerator"}) {
    auto* s = sub(name, name == std::string("theta") ? "character of the dual representation"
                                                     : "Delta * character as an alternating sum");
    pair_opts(s);
    point_opts(s);
    s->add_flag("--normalize", o.normalize, "divide out the constant fixed by the minimal K-type");
    s->add_option("--depth", o.depth, "expansion depth used by --normalize");
  }
  {
    auto* s = sub("theta-closed-u1", "single-sum closed form for U(1) x U(p,q)");
    s->add_option("--p", o.p)->required();
    s->add_option("--q", o.q)->required();
    s->add_option("--lambda1", o.lambda1)->required();
    s->add_option("--m", o.m, "0 or 1");
    point_opts(s);
  }
  for (const char* name : {"constant", "ktypes"}) {
    auto* s = sub(name, name == std::string("ktypes") ? "K-type multiplicities" : "normalizing constant");
    pair_opts(s);
    s->add_option("--depth", o.depth);
    if (name == std::string("constant")) s->add_option("--lambda", o.lambda, "K-weight (default: the minimal one)");
  }
  {
    auto* s = sub("support", "support interval and admissible embeddings");
    pair_opts(s);
  }
  {
    auto* s = sub("identity", "the Vandermonde partial-fraction identity");
    s->add_option("--p", o.p)->required();
    s->add_option("--q", o.q)->required();
    s->add_option("--k", o.k)->required();
    s->add_option("--mode", o.mode, "grid or random");
    s->add_option("--samples", o.samples, "random mode");
  }
  {
    auto* s = sub("rdv", "orbit Fourier transform for U(n)");
    s->add_option("--lambda", o.lambda)->required();
    s->add_option("--x", o.x);
    point_opts(s);
  }
  {
    auto* s = sub("oracle", "HCIZ or Monte Carlo orbit integral for U(n)");
    s->add_option("--lambda", o.lambda)->required();
    s->add_option("--x", o.x);
    point_opts(s);
    s->add_option("--method", o.method)->check(CLI::IsMember({"hciz", "mc"}));
    s->add_option("--samples", o.mc_samples, "Monte Carlo samples");
  }
  {
    auto* s = sub("verify", "run the invariant suite");
    s->add_flag("--quick", o.quick);
    s->add_option("--check", o.check, "run one check");
  }

  try {
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  std::string cmd;
  for (const auto& [name, s] : subs)
    if (s->parsed()) cmd = name;

  Job job;
  try {
    kernels::apply_thread_cap_from_env();
    run(cmd, o, job);
  } catch (const UsageError& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }

  if (o.format == "table") {
    print_table(job);
  } else {
    json out = {{"meta", job.meta}, {"results", job.results}, {"warnings", job.warnings}};
    std::cout << out.dump(2) << "\n";
  }
  return job.failed ? 1 : 0;
}
