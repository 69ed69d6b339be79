// inflect: command-line front end for the inflection-polynomial toolkit.

#include <infl/checks.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <thread>

using namespace infl;
using json = nlohmann::ordered_json;

namespace {

constexpr const char* kVersion = "0.1.0";

struct Global {
  bool json = false;
  bool no_header = false;
  std::string out;
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  std::string config;
  std::map<std::string, std::string> preset;  // from the config file
};

std::string timestamp() {
  auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
  return buf;
}

std::string header_line(const Global& g, const std::string& cmd) {
  if (g.no_header) return "";
  return "# inflect " + std::string(kVersion) + " " + cmd + " " + timestamp() + "\n";
}

std::map<std::string, std::string> read_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file " + path);
  std::map<std::string, std::string> kv;
  std::string line;
  int n = 0;
  while (std::getline(in, line)) {
    ++n;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    auto trim = [](std::string s) {
      auto a = s.find_first_not_of(" \t\r"), b = s.find_last_not_of(" \t\r");
      return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    line = trim(line);
    if (line.empty() || line.front() == '[') continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) throw UsageError(path + ":" + std::to_string(n) + ": expected key = value");
    std::string v = trim(line.substr(eq + 1));
    if (v.size() >= 2 && v.front() == '"' && v.back() == '"') v = v.substr(1, v.size() - 2);
    kv[trim(line.substr(0, eq))] = v;
  }
  return kv;
}

/// Writes to DIR/name when --out is given, otherwise to stdout.
void emit(const Global& g, const std::string& name, const std::string& text) {
  if (g.out.empty()) {
    std::cout << text;
    return;
  }
  std::filesystem::create_directories(g.out);
  auto path = std::filesystem::path(g.out) / name;
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path.string());
  f << text;
  if (!f) throw std::runtime_error("write failed: " + path.string());
  std::cerr << "wrote " << path.string() << "\n";
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

// ---------------------------------------------------------------------------
// Pencils from flags

struct PencilChoice {
  std::string family = "weierstrass";
  std::string abc = "1,1,1";
  std::string poly;
  int n = 2, ell = 1;
  std::string u;  // empty: l/n
};

PencilSpec make_spec(const PencilChoice& c) {
  if (c.n < 2 || c.ell < 1) throw UsageError("need n >= 2 and l >= 1");
  if (c.family == "legendre") {
    auto abc = detail::parse_abc(c.abc);
    return PencilSpec::legendre(abc.a, abc.b, abc.c, c.n, c.ell);
  }
  if (c.family == "weierstrass") return PencilSpec::of(Family::weierstrass, c.n, c.ell);
  if (c.family == "weierstrass-centered") return weierstrass_centered(c.n, c.ell);
  if (c.family == "d4") return PencilSpec::of(Family::d4, c.n, c.ell);
  if (c.family == "d6") return PencilSpec::of(Family::d6, c.n, c.ell);
  if (c.family == "bielliptic") return PencilSpec::of(Family::bielliptic, c.n, c.ell);
  if (c.family == "custom") {
    if (c.poly.empty()) throw UsageError("--family custom needs --poly");
    return PencilSpec::with_poly(parse_poly(c.poly), c.n, c.ell);
  }
  throw UsageError("unknown family '" + c.family + "'");
}

UMode make_u(const PencilChoice& c, const PencilSpec& spec) {
  if (c.u.empty()) return UMode::of(spec);
  if (c.u == "symbolic" || c.u == "u") return UMode::sym();
  try {
    return UMode::at(Rational::parse(c.u));
  } catch (const std::exception&) {
    throw UsageError("--u takes 'symbolic' or a rational such as 1/2");
  }
}

Var pencil_param(const PencilChoice& c) {
  if (c.family == "d4") return var::s;
  if (c.family == "d6") return var::z;
  if (c.family == "bielliptic") throw UsageError("the bielliptic pencil has two parameters; use discriminant");
  return var::lam;
}

void add_pencil_options(CLI::App* sub, PencilChoice& c) {
  sub->add_option("--family", c.family, "legendre | weierstrass | weierstrass-centered | d4 | d6 | bielliptic | custom")
      ->capture_default_str();
  sub->add_option("--abc", c.abc, "Legendre exponents a,b,c")->capture_default_str();
  sub->add_option("--poly", c.poly, "f(x, params) for --family custom");
  sub->add_option("--n", c.n, "cyclic degree n")->capture_default_str();
  sub->add_option("--ell", c.ell, "section index l")->capture_default_str();
  sub->add_option("--u", c.u, "'symbolic' or a rational; defaults to l/n");
}

// ---------------------------------------------------------------------------
// Subcommands

int cmd_inflect(const Global& g, const PencilChoice& c, int m, bool factor) {
  if (m < 1) throw UsageError("--m must be positive");
  PencilSpec spec = make_spec(c);
  UMode um = make_u(c, spec);
  Poly p = atomic_inflection(spec, m, um).poly;
  json meta;
  meta["m"] = m;
  meta["spec"] = spec.key();
  meta["n"] = spec.n;
  meta["ell"] = spec.ell;
  meta["u"] = um.str();
  meta["terms"] = p.terms().size();
  json primes = json::array();
  for (auto& q : denominator_primes(p)) primes.push_back(q.get_str());
  meta["denominator_primes"] = primes;
  std::string text = p.str() + "\n";
  if (factor) {
    if (c.family != "d6") throw UsageError("--factor peels x^e (4z - 1) and is defined for --family d6");
    if (um.symbolic || um.value != Rational(1, 2)) throw UsageError("--factor is stated for u = 1/2");
    auto f = d6_factor(m, um);
    json fj;
    fj["x_power"] = f.e;
    fj["x_power_divides"] = f.x_power_divides;
    fj["has_factor_4z_minus_1"] = f.has_factor_4z_minus_1;
    fj["rest"] = f.rest.str();
    meta["factor"] = fj;
    std::string peeled = (f.e ? "x^" + std::to_string(f.e) : std::string("1")) +
                         (f.has_factor_4z_minus_1 ? "*(4*z - 1)" : "");
    text = "peeled " + peeled + (f.x_power_divides && f.has_factor_4z_minus_1 ? "" : " (incomplete)") + "\n" +
           peeled + "*(" + f.rest.str() + ")\n";
  }
  meta["poly"] = p.str();
  std::string stem = spec.key() + "_m" + std::to_string(m);
  for (auto& ch : stem)
    if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_' && ch != '-') ch = '_';
  if (!g.out.empty()) {
    emit(g, stem + ".txt", text);
    emit(g, stem + ".json", dump(meta));
  } else if (g.json) {
    emit(g, "", dump(meta));
  } else {
    emit(g, "", header_line(g, "inflect") + text);
  }
  return 0;
}

int cmd_newton(const Global& g, const PencilChoice& c, int m, const std::string& at) {
  if (m < 1) throw UsageError("--m must be positive");
  PencilSpec spec = make_spec(c);
  UMode um = make_u(c, spec);
  Var b = pencil_param(c);
  Poly p = atomic_inflection(spec, m, um).poly;
  LatticePolygon poly;
  long delta = -1;
  std::string center = "origin";
  if (at == "origin") {
    poly = newton_polygon(p, var::x, b);
    if (!p.constant_term().is_zero()) delta = 0;
    else delta = lower_hull_delta(p, var::x, b).delta;
  } else if (at == "centered") {
    if (c.family == "weierstrass") {
      center = "(1,-3)";
      Poly q = translate(p, {{var::x, Rational(1)}, {var::lam, Rational(-3)}});
      poly = newton_polygon(q, var::x, var::lam);
      delta = q.constant_term().is_zero() ? lower_hull_delta(q, var::x, var::lam).delta : 0;
    } else if (c.family == "d4") {
      center = "(sqrt(-1/2),1/4)";
      auto ring = sqrt_minus_half();
      PolyQ q = center_at(p, var::x, QElem::generator(ring), var::s, QElem(Rational(1, 4)));
      poly = newton_polygon(q, var::x, var::s);
      delta = lower_hull_delta(q, var::x, var::s).delta;
    } else {
      throw UsageError("--at centered is available for weierstrass and d4");
    }
  } else {
    throw UsageError("--at takes origin or centered");
  }
  long interior = poly.degenerate() ? 0 : interior_lattice_points(poly).count;
  json j;
  j["spec"] = spec.key();
  j["m"] = m;
  j["u"] = um.str();
  j["center"] = center;
  j["polygon"] = poly.str();
  json vs = json::array();
  for (auto& v : poly.vertices()) vs.push_back({v.x, v.y});
  j["vertices"] = vs;
  j["interior_points"] = interior;
  if (delta >= 0) j["lower_hull_delta"] = delta;
  std::string text;
  if (g.json) text = dump(j);
  else {
    text = header_line(g, "newton") + "polygon " + poly.str() + "\ninterior " + std::to_string(interior) + "\n";
    if (delta >= 0) text += "delta " + std::to_string(delta) + "\n";
  }
  emit(g, "newton_" + std::to_string(m) + (g.json ? ".json" : ".txt"), text);
  return 0;
}

json report_json(const VerificationReport& r, bool timings) {
  json j;
  j["id"] = r.id;
  json ps = json::object();
  for (auto& [k, v] : r.params) ps[k] = v;
  j["params"] = ps;
  j["verdict"] = verdict_name(r.verdict);
  j["computed"] = r.computed;
  j["expected"] = r.expected;
  if (r.counterexample) j["counterexample"] = *r.counterexample;
  if (!r.assumption.empty()) j["assumption"] = r.assumption;
  j["millis"] = timings ? std::round(r.millis * 1000) / 1000 : 0.0;
  return j;
}

std::string report_text(const VerificationReport& r, bool timings) {
  std::string verdict = verdict_name(r.verdict);
  for (auto& ch : verdict) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  std::string ps;
  for (auto& [k, v] : r.params) ps += " " + k + "=" + v;
  std::ostringstream s;
  s << verdict << " " << r.id << (ps.empty() ? "" : " [" + ps.substr(1) + "]");
  if (timings) s << " (" << static_cast<long>(std::round(r.millis)) << " ms)";
  s << "\n  computed: " << r.computed << "\n  expected: " << r.expected << "\n";
  if (r.counterexample) s << "  " << (r.verdict == Verdict::refused ? "reason" : "counterexample") << ": "
                          << *r.counterexample << "\n";
  if (!r.assumption.empty()) s << "  assumption: " << r.assumption << "\n";
  return s.str();
}

std::string catalog_text() {
  std::string s;
  for (auto& d : check_registry()) {
    s += d.id + " [" + d.status + "]\n  " + d.anchor + "\n";
    for (auto& p : d.schema) s += "  --" + p.key + " (default " + p.fallback + "): " + p.help + "\n";
  }
  return s;
}

/// Splits the verify arguments into check ids, global flags and "--key value" / "--key=value" parameters.
std::map<std::string, std::string> parse_verify_args(Global& g, std::vector<std::string>& ids,
                                                     const std::vector<std::string>& args) {
  std::map<std::string, std::string> kv;
  for (std::size_t i = 0; i < args.size(); ++i) {
    const std::string& a = args[i];
    if (a == "--json") {
      g.json = true;
    } else if (a == "--no-header") {
      g.no_header = true;
    } else if (a.rfind("--", 0) != 0) {
      ids.push_back(a);
    } else if (auto eq = a.find('='); eq != std::string::npos) {
      kv[a.substr(2, eq - 2)] = a.substr(eq + 1);
    } else {
      if (i + 1 >= args.size()) throw UsageError(a + " needs a value");
      kv[a.substr(2)] = args[++i];
    }
  }
  if (kv.count("out")) g.out = kv["out"], kv.erase("out");
  if (kv.count("threads")) g.threads = static_cast<unsigned>(std::max(1L, parse_range(kv["threads"]).at(0)));
  return kv;
}

int cmd_verify(Global g, bool list, const std::vector<std::string>& args) {
  std::vector<std::string> ids;
  auto given = parse_verify_args(g, ids, args);
  if (list) {
    if (g.json) {
      json cat = json::array();
      for (auto& d : check_registry()) {
        json ps = json::array();
        for (auto& p : d.schema) ps.push_back({{"key", p.key}, {"default", p.fallback}, {"help", p.help}});
        cat.push_back({{"id", d.id}, {"status", d.status}, {"anchor", d.anchor}, {"params", ps}});
      }
      emit(g, "catalog.json", dump(cat));
    } else {
      emit(g, "catalog.txt", catalog_text());
    }
    return 0;
  }
  if (ids.empty()) throw UsageError("verify needs a check id, 'all', or --list");
  bool all = ids.size() == 1 && ids[0] == "all";
  std::vector<const CheckDescriptor*> todo;
  if (all) {
    for (auto& d : check_registry()) todo.push_back(&d);
  } else {
    for (auto& id : ids) {
      auto* d = find_check(id);
      if (!d) {
        std::cerr << "unknown check id '" << id << "'; registered checks:\n" << catalog_text();
        return 2;
      }
      todo.push_back(d);
    }
    std::sort(todo.begin(), todo.end(), [](auto* a, auto* b) { return a->id < b->id; });
    todo.erase(std::unique(todo.begin(), todo.end()), todo.end());
  }
  std::vector<std::map<std::string, std::string>> chosen(todo.size());
  for (std::size_t i = 0; i < todo.size(); ++i) {
    std::set<std::string> keys;
    for (auto& p : todo[i]->schema) keys.insert(p.key);
    for (auto& [k, v] : g.preset)
      if (keys.count(k)) chosen[i][k] = v;
    for (auto& [k, v] : given)
      if (!all || keys.count(k)) chosen[i][k] = v;
    if (keys.count("threads") && !given.count("threads")) chosen[i]["threads"] = std::to_string(g.threads);
  }
  // Checks run concurrently; results are reported in registry (id) order.
  std::vector<VerificationReport> reports(todo.size());
  std::vector<std::exception_ptr> errors(todo.size());
  std::atomic<std::size_t> next{0};
  unsigned workers = std::min<unsigned>(g.threads, static_cast<unsigned>(todo.size()));
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < std::max(1u, workers); ++w)
    pool.emplace_back([&] {
      for (std::size_t i; (i = next++) < todo.size();) {
        try {
          reports[i] = run_check(*todo[i], chosen[i]);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    });
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);

  bool timings = !g.no_header;
  int code = 0;
  for (auto& r : reports)
    if (r.verdict == Verdict::fail) code = 1;
  std::string text;
  if (g.json) {
    json j;
    if (!g.no_header) j["generated"] = timestamp();
    json rs = json::array();
    for (auto& r : reports) rs.push_back(report_json(r, timings));
    j["reports"] = rs;
    text = dump(j);
  } else {
    text = header_line(g, "verify");
    int pass = 0, fail = 0, refused = 0;
    for (auto& r : reports) {
      text += report_text(r, timings);
      (r.verdict == Verdict::pass ? pass : r.verdict == Verdict::fail ? fail : refused)++;
    }
    text += std::to_string(pass) + " pass, " + std::to_string(fail) + " fail, " + std::to_string(refused) + " refused\n";
  }
  emit(g, g.json ? "verify.json" : "verify.txt", text);
  return code;
}

int cmd_count(const Global& g, const std::string& curve, const std::string& poly_text, const std::string& vars,
              std::string primes, std::string closure, bool brute) {
  if (primes.empty()) primes = g.preset.count("p") ? g.preset.at("p") : "";
  if (primes.empty()) throw UsageError("count needs --p (a prime, a list, or a range such as 5..100)");
  auto ps_raw = parse_range(primes);
  Poly P;
  Var a = var::x, b = var::s;
  if (!curve.empty()) {
    if (curve != "d4-c2") throw UsageError("unknown curve '" + curve + "' (known: d4-c2)");
    if (!poly_text.empty()) throw UsageError("give either --curve or --poly");
    P = d4_c2();
    if (closure.empty()) closure = "projective";
  } else {
    if (poly_text.empty()) throw UsageError("count needs --curve or --poly");
    P = parse_poly(poly_text);
    auto comma = vars.find(',');
    if (comma == std::string::npos) throw UsageError("--vars takes two names such as x,lam");
    auto va = var_by_name(vars.substr(0, comma)), vb = var_by_name(vars.substr(comma + 1));
    if (!va || !vb || *va == *vb) throw UsageError("--vars: unknown or repeated variable in '" + vars + "'");
    a = *va, b = *vb;
    if (closure.empty()) closure = "affine";
  }
  Closure cl;
  if (closure == "affine") cl = Closure::affine_plane();
  else if (closure == "projective") cl = Closure::projective_p2();
  else if (closure.rfind("weighted:", 0) == 0) cl = Closure::weighted_plane(static_cast<int>(parse_range(closure.substr(9)).at(0)));
  else throw UsageError("--closure takes affine, projective or weighted:W");

  bool single = ps_raw.size() == 1;
  std::vector<std::uint64_t> ps;
  for (long q : ps_raw)
    if (q > 1 && is_prime(static_cast<std::uint64_t>(q))) ps.push_back(static_cast<std::uint64_t>(q));
    else if (single) ps.push_back(static_cast<std::uint64_t>(std::max(0L, q)));
  std::vector<PointCountRecord> rs;
  std::vector<std::string> refused;
  for (auto p : ps) {
    try {
      PointCountRecord r;
      r.p = p;
      bool fast = !brute && curve == "d4-c2";
      r.count = fast ? fast_count_C2(p) : count_points(P, a, b, p, cl);
      r.e = r.count - static_cast<long>(p + 1);
      r.e_tilde = static_cast<double>(r.e) / (2.0 * std::sqrt(static_cast<double>(p)));
      r.strategy = fast ? "fiberwise" : "brute";
      rs.push_back(r);
    } catch (const BadPrime& e) {
      refused.push_back(std::to_string(p) + ": " + e.what());
    }
  }
  std::string text;
  if (g.json) {
    json j;
    j["curve"] = curve.empty() ? P.str() : curve;
    j["closure"] = cl.str();
    json arr = json::array();
    for (auto& r : rs) arr.push_back({{"p", r.p}, {"count", r.count}, {"e", r.e}, {"e_tilde", r.e_tilde}});
    j["records"] = arr;
    if (!refused.empty()) {
      j["verdict"] = "refused";
      j["refused"] = refused;
    }
    text = dump(j);
  } else if (single && rs.size() == 1 && refused.empty()) {
    text = std::to_string(rs[0].count) + "\n";
  } else {
    text = records_csv(rs, g.no_header ? "" : header_line(g, "count"));
    for (auto& r : refused) text += "# refused " + r + "\n";
  }
  if (single && !refused.empty() && !g.json) text = "refused: bad prime " + refused[0] + "\n";
  emit(g, g.json ? "count.json" : "count.csv", text);
  return 0;
}

int cmd_satotate(const Global& g, long bound, int bins) {
  if (bound < 100) throw UsageError("--bound must be at least 100");
  if (bins < 1 || bins > 10000) throw UsageError("--bins must be between 1 and 10000");
  auto st = satotate(static_cast<std::uint64_t>(bound), bins, g.threads);
  std::ostringstream ks;
  ks.precision(6);
  ks << std::fixed << st.ks;
  std::string summary = "# KS " + ks.str() + " over " + std::to_string(st.records.size()) + " primes 7 <= p <= " +
                        std::to_string(bound) + "; Hasse bound " + (st.hasse_ok ? "holds" : "violated") + "\n";
  std::string head = g.no_header ? "" : header_line(g, "satotate");
  if (g.json) {
    json j;
    j["bound"] = bound;
    j["bins"] = bins;
    j["primes"] = st.records.size();
    j["ks"] = st.ks;
    j["hasse_ok"] = st.hasse_ok;
    json h = json::array();
    for (auto& [r, f] : st.histogram) h.push_back({{"bin_left", r.first}, {"bin_right", r.second}, {"frequency", f}});
    j["histogram"] = h;
    emit(g, "satotate.json", dump(j));
  } else if (!g.out.empty()) {
    emit(g, "satotate_records.csv", records_csv(st.records, head));
    emit(g, "satotate_histogram.csv", histogram_csv(st, head));
    std::cout << summary;
  } else {
    std::cout << histogram_csv(st, head) << summary;
  }
  return 0;
}

int cmd_discriminant(const Global& g, int m, const std::string& path, bool full) {
  if (m < 2 || m > 6) throw UsageError("--m must be between 2 and 6");
  if (path != "interp" && path != "direct") throw UsageError("--path takes interp or direct");
  auto d = surface_discriminant(m, path == "direct" ? ResultantPath::direct : ResultantPath::interpolation, g.threads);
  auto deg = [](const Poly& p) { return p.total_degree(); };
  json j;
  j["m"] = m;
  j["convention"] = d.convention;
  j["degree"] = deg(d.delta);
  j["squarefree_degree"] = deg(d.squarefree);
  json ledger = json::array();
  for (auto& e : d.ledger.entries)
    ledger.push_back({{"component", e.name}, {"divides", e.divides}, {"multiplicity", e.multiplicity},
                      {"simple_in_squarefree", e.simple_in_squarefree}});
  j["ledger"] = ledger;
  j["product_divides_squarefree"] = d.ledger.product_divides;
  if (full) {
    j["delta"] = d.delta.str();
    j["squarefree"] = d.squarefree.str();
  }
  std::string text;
  if (g.json) text = dump(j);
  else {
    text = header_line(g, "discriminant") + "m " + std::to_string(m) + "\nconvention " + d.convention + "\ndegree " +
           std::to_string(deg(d.delta)) + ", squarefree part degree " + std::to_string(deg(d.squarefree)) + "\n";
    for (auto& e : d.ledger.entries)
      text += e.name + " multiplicity " + std::to_string(e.multiplicity) +
              (e.simple_in_squarefree ? ", simple in squarefree part" : ", not simple in squarefree part") + "\n";
    text += std::string("product of components ") + (d.ledger.product_divides ? "divides" : "does not divide") +
            " the squarefree part\n";
    if (full) text += "delta " + d.delta.str() + "\nsquarefree " + d.squarefree.str() + "\n";
  }
  emit(g, "discriminant_m" + std::to_string(m) + (g.json ? ".json" : ".txt"), text);
  return 0;
}

int cmd_wronskian(const Global& g, int n, int d, int ell, const std::string& f_text) {
  auto basis = monomial_basis(n, d, ell);
  json j;
  j["n"] = n;
  j["d"] = d;
  j["ell"] = ell;
  j["genus"] = basis.genus;
  json bs = json::array();
  std::string text = header_line(g, "wronskian") + "basis";
  for (auto& e : basis.elements) {
    bs.push_back({{"i", e.i}, {"j", e.j}, {"pole_order", e.pole_order}});
    text += " x^" + std::to_string(e.i) + "y^" + std::to_string(e.j);
  }
  text += "\ngenus " + std::to_string(basis.genus) + "\n";
  j["basis"] = bs;
  std::optional<Poly> f;
  if (!f_text.empty()) f = parse_poly(f_text);
  try {
    auto w = wronskian_matrix_away(n, d, ell, f);
    json rows = json::array();
    text += "matrix (rows k = " + std::to_string(w.rows.front()) + ".." + std::to_string(w.rows.back()) + ")\n";
    for (auto& row : w.labels) {
      rows.push_back(row);
      std::string line;
      for (auto& l : row) line += (line.empty() ? "  " : " ") + l;
      text += line + "\n";
    }
    j["matrix"] = rows;
    if (w.det) {
      j["det"] = w.det->str();
      text += "det " + w.det->str() + "\n";
    }
  } catch (const std::invalid_argument& e) {
    j["matrix_note"] = e.what();
    text += "matrix not formed: " + std::string(e.what()) + "\n";
  }
  emit(g, "wronskian_" + std::to_string(n) + "_" + std::to_string(d) + "_" + std::to_string(ell) +
              (g.json ? ".json" : ".txt"),
       g.json ? dump(j) : text);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Atomic inflection polynomials of superelliptic pencils: computation and verification"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  app.fallthrough();
  Global g;
  app.add_flag("--json", g.json, "JSON output");
  app.add_option("--out", g.out, "write outputs into this directory");
  app.add_option("--threads", g.threads, "worker threads")->check(CLI::PositiveNumber);
  app.add_flag("--no-header", g.no_header, "omit the timestamp header and timings");
  app.add_option("--config", g.config, "key = value file presetting ranges and bounds")->check(CLI::ExistingFile);

  PencilChoice pc;
  int m = 3;
  bool factor = false;
  auto* inflect = app.add_subcommand("inflect", "atomic inflection polynomial P_m");
  add_pencil_options(inflect, pc);
  inflect->add_option("--m", m, "index m")->capture_default_str();
  inflect->add_flag("--factor", factor, "D6: peel x^e (4z - 1)");

  std::string at = "origin";
  auto* newton = app.add_subcommand("newton", "Newton polygon of P_m");
  add_pencil_options(newton, pc);
  newton->add_option("--m", m, "index m")->capture_default_str();
  newton->add_option("--at", at, "origin | centered")->capture_default_str();

  bool list = false;
  auto* verify = app.add_subcommand("verify", "verify ID... | all | --list; --key value pairs set check parameters");
  verify->add_flag("--list", list, "print the catalog");
  verify->allow_extras();
  verify->fallthrough(false);

  std::string curve, poly, vars = "x,s", primes, closure;
  bool brute = false;
  auto* count = app.add_subcommand("count", "F_p point counts");
  count->add_option("--curve", curve, "named curve: d4-c2");
  count->add_option("--poly", poly, "plane curve given by a polynomial");
  count->add_option("--vars", vars, "the two variables of --poly")->capture_default_str();
  count->add_option("--p", primes, "prime, list or range");
  count->add_option("--closure", closure, "affine | projective | weighted:W");
  count->add_flag("--brute", brute, "enumerate instead of counting fiberwise");

  long bound = 10000;
  int bins = 40;
  auto* sato = app.add_subcommand("satotate", "Sato-Tate statistics for the D4 curve C_2");
  sato->add_option("--bound", bound, "prime bound")->capture_default_str();
  sato->add_option("--bins", bins, "histogram bins")->capture_default_str();

  std::string path = "interp";
  bool full = false;
  auto* disc = app.add_subcommand("discriminant", "bielliptic inflectionary discriminant and its component ledger");
  disc->add_option("--m", m, "index m")->capture_default_str();
  disc->add_option("--path", path, "interp | direct")->capture_default_str();
  disc->add_flag("--full", full, "print the polynomials");

  int wn = 2, wd = 5, wl = 6;
  std::string wf;
  auto* wr = app.add_subcommand("wronskian", "monomial basis and the Wronskian matrix away from ramification");
  wr->add_option("--n", wn, "cyclic degree")->capture_default_str();
  wr->add_option("--d", wd, "degree of f")->capture_default_str();
  wr->add_option("--ell", wl, "section index")->capture_default_str();
  wr->add_option("--f", wf, "f(x) for the determinant");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (!g.config.empty()) {
      g.preset = read_config(g.config);
      if (g.preset.count("threads") && app.count("--threads") == 0)
        g.threads = static_cast<unsigned>(std::max(1L, parse_range(g.preset.at("threads")).at(0)));
    }
    auto preset_int = [&](CLI::App* sub, const char* flag, const char* key, auto& target) {
      if (sub->count(flag) == 0 && g.preset.count(key))
        target = static_cast<std::remove_reference_t<decltype(target)>>(parse_range(g.preset.at(key)).at(0));
    };
    if (*inflect) return cmd_inflect(g, pc, m, factor);
    if (*newton) return cmd_newton(g, pc, m, at);
    if (*verify) return cmd_verify(g, list, verify->remaining());
    if (*count) return cmd_count(g, curve, poly, vars, primes, closure, brute);
    if (*sato) {
      preset_int(sato, "--bound", "bound", bound);
      preset_int(sato, "--bins", "bins", bins);
      return cmd_satotate(g, bound, bins);
    }
    if (*disc) {
      preset_int(disc, "--m", "m", m);
      return cmd_discriminant(g, m, path, full);
    }
    if (*wr) return cmd_wronskian(g, wn, wd, wl, wf);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
