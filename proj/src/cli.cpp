#include "hofd/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <memory>
#include <optional>

#include "hofd/error.hpp"
#include "hofd/hoseries.hpp"
#include "hofd/jack.hpp"
#include "hofd/lauricella.hpp"
#include "hofd/verify.hpp"

namespace hofd {

namespace {

struct RunConfig {
  std::string fn;
  std::string suite;
  int n = 0;
  std::string k, nu;
  std::vector<std::string> params;
  std::vector<std::string> points;
  std::string points_file;
  std::vector<std::string> grids;
  int height = 0;
  double tol = 0.0;
  std::uint64_t seed = 20240601;
  std::string out_path;
  std::string format;
  bool flip_rho = false;
};

std::string num(double v) {
  if (!std::isfinite(v)) return "null";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string csv_num(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return num(v);
}

std::string quoted(const std::string& s) { return nlohmann::json(s).dump(); }

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

std::vector<std::string> split(const std::string& text, const std::string& seps) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (seps.find(c) != std::string::npos) {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else if (c != ' ' || seps.find(' ') == std::string::npos) {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  for (auto& s : out) {
    const auto a = s.find_first_not_of(" \t"), b = s.find_last_not_of(" \t\r");
    s = a == std::string::npos ? "" : s.substr(a, b - a + 1);
  }
  return out;
}

double parse_double(const std::string& text, const std::string& what) {
  double v = 0.0;
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end) {
    throw Error(ErrorKind::Usage, "cannot read " + what + " \"" + text + "\" as a number");
  }
  return v;
}

std::vector<double> parse_list(const std::string& text, const std::string& what) {
  std::vector<double> out;
  for (const auto& s : split(text, ", ")) out.push_back(parse_double(s, what));
  return out;
}

// ---------------------------------------------------------------------------
// Function registry

struct Outcome {
  Complex value;
  int height = 0;
  double tail = 0.0;
  std::string polynomial;
};

class Function {
 public:
  virtual ~Function() = default;
  /// Number of point coordinates, or 0 when the function takes no point.
  virtual int arity() const = 0;
  /// Arguments along the `t` grid ray.
  virtual std::vector<double> ray(double t) const = 0;
  virtual Outcome eval(const std::vector<double>& p) = 0;
  /// Batch hook for functions that share work across points.
  virtual void prepare(const std::vector<std::vector<double>>&) {}
};

using Params = std::map<std::string, std::string>;

class ParamReader {
 public:
  ParamReader(std::string fn, Params p, bool exact) : fn_(std::move(fn)), p_(std::move(p)) {
    for (const auto& [key, value] : p_) {
      if (exact && key != "partition" && !looks_rational(value)) {
        throw Error(ErrorKind::Usage, fn_ + " works in exact arithmetic: give " + key +
                                          " as a rational like 3/7, not \"" + value + "\"");
      }
      if (!exact && value.find('/') != std::string::npos) {
        throw Error(ErrorKind::Usage, fn_ + " works in floating point: give " + key +
                                          " as a decimal, not \"" + value + "\"");
      }
    }
  }

  bool has(const std::string& key) const { return p_.count(key) != 0; }

  const std::string& raw(const std::string& key) const {
    const auto it = p_.find(key);
    if (it == p_.end()) throw Error(ErrorKind::Usage, fn_ + " needs the parameter " + key);
    return it->second;
  }
  double real(const std::string& key) const { return parse_double(raw(key), key); }
  std::vector<double> list(const std::string& key) const { return parse_list(raw(key), key); }
  Rational exact(const std::string& key) const { return parse_rational(raw(key)); }

 private:
  std::string fn_;
  Params p_;
};

void require_arity(const std::vector<double>& p, std::size_t m) {
  if (p.size() != m) {
    throw Error(ErrorKind::InvalidDimension, "point has " + std::to_string(p.size()) +
                                                 " coordinates, expected " + std::to_string(m));
  }
}

std::vector<double> rho_ray(int n, double t) {
  std::vector<double> z(n);
  for (int i = 0; i < n; ++i) z[i] = std::exp(t * (2 * i - (n - 1)));
  return z;
}

Tolerance series_tol(double tol) { return tol > 0 ? Tolerance{tol, tol, 20000} : Tolerance{}; }

class FdFunction : public Function {
 public:
  FdFunction(const ParamReader& r, double tol, int betas_expected)
      : tol_(series_tol(tol)) {
    p_.alpha = r.real("alpha");
    p_.gamma = r.real("gamma");
    std::vector<double> b;
    if (betas_expected == 2 && r.has("beta1")) {
      b = {r.real("beta1"), r.real("beta2")};
    } else {
      b = r.list(betas_expected == 1 && r.has("b") ? "b" : "beta");
    }
    if (betas_expected > 0 && static_cast<int>(b.size()) != betas_expected) {
      throw Error(ErrorKind::Usage, "expected " + std::to_string(betas_expected) + " beta values");
    }
    if (b.empty()) throw Error(ErrorKind::Usage, "need at least one beta");
    p_.betas.assign(b.begin(), b.end());
  }
  int arity() const override { return static_cast<int>(p_.betas.size()); }
  std::vector<double> ray(double t) const override { return std::vector<double>(arity(), t); }
  Outcome eval(const std::vector<double>& p) override {
    require_arity(p, p_.betas.size());
    const std::vector<Complex> y(p.begin(), p.end());
    const auto v = fd_series_eval<double>(p_, y, tol_);
    return {v.value, v.degree, v.tail, {}};
  }

 protected:
  SeriesParams p_;
  Tolerance tol_;
};

struct Gauss : FdFunction {
  static Params remap(Params p) {
    if (p.count("a")) p["alpha"] = p["a"];
    if (p.count("c")) p["gamma"] = p["c"];
    p.erase("a");
    p.erase("c");
    return p;
  }
  Gauss(const ParamReader& r, double tol) : FdFunction(r, tol, 1) {}
};

class G2Function : public Function {
 public:
  G2Function(const ParamReader& r, double tol)
      : a_(r.real("alpha")), ap_(r.real("alpha_p")), b_(r.real("beta")), bp_(r.real("beta_p")),
        tol_(series_tol(tol)) {}
  int arity() const override { return 2; }
  std::vector<double> ray(double t) const override { return {t, t}; }
  Outcome eval(const std::vector<double>& p) override {
    require_arity(p, 2);
    const auto v = horn_g2_eval(a_, ap_, b_, bp_, p[0], p[1], tol_);
    return {v.value, v.degree, v.tail, {}};
  }

 private:
  double a_, ap_, b_, bp_;
  Tolerance tol_;
};

// lambda(nu, k) is built in binary128; see QuadWeight.
QuadWeight spectral_weight(const ParamReader& r, int& n, double& k) {
  k = r.real("k");
  if (r.has("lambda")) {
    const auto l = r.list("lambda");
    if (n != 0 && static_cast<int>(l.size()) != n) {
      throw Error(ErrorKind::Usage, "lambda has " + std::to_string(l.size()) + " entries, n = " +
                                        std::to_string(n));
    }
    n = static_cast<int>(l.size());
    return to_quad(Weight(std::vector<Complex>(l.begin(), l.end()), 1e-9));
  }
  if (n < 2) throw Error(ErrorKind::Usage, "give --n together with --nu, or lambda=...");
  return degenerate_lambda_quad(n, r.real("nu"), k);
}

HcPolicy make_policy(int height, double tol) {
  HcPolicy p;
  if (height > 0) p.max_height = height;
  if (tol > 0) p.tol = {tol, tol, 20000};
  return p;
}

class PhiFunction : public Function {
 public:
  PhiFunction(const ParamReader& r, int n, int height, double tol) : n_(n) {
    double k = 0;
    const QuadWeight lam = spectral_weight(r, n_, k);
    series_ = std::make_unique<HarishChandraSeries>(lam, k, make_policy(height, tol));
  }
  int arity() const override { return n_; }
  std::vector<double> ray(double t) const override { return rho_ray(n_, t); }
  Outcome eval(const std::vector<double>& p) override {
    require_arity(p, n_);
    const auto r = series_->evaluate(ChamberPoint::normalized(p, ChamberPoint::Region::APlus));
    return {r.value, r.height, r.tail, {}};
  }

 private:
  int n_;
  std::unique_ptr<HarishChandraSeries> series_;
};

class CFunction : public Function {
 public:
  CFunction(const ParamReader& r, int n) : n_(n) { lambda_ = spectral_weight(r, n_, k_); }
  int arity() const override { return 0; }
  std::vector<double> ray(double) const override { return {}; }
  Outcome eval(const std::vector<double>&) override { return {c_func(lambda_, k_), 0, 0.0, {}}; }

 private:
  int n_;
  double k_ = 0;
  QuadWeight lambda_;
};

class ConnectionFunction : public Function {
 public:
  ConnectionFunction(const ParamReader& r, int n, int height, double tol) : n_(n) {
    lambda_ = spectral_weight(r, n_, k_);
    opts_.policy = make_policy(height, tol);
  }
  int arity() const override { return n_; }
  std::vector<double> ray(double t) const override { return rho_ray(n_, t); }
  // One batch shares the n! coefficient tables over every valid point.
  void prepare(const std::vector<std::vector<double>>& points) override {
    std::vector<ChamberPoint> good;
    std::vector<std::size_t> where;
    for (std::size_t i = 0; i < points.size(); ++i) {
      try {
        require_arity(points[i], n_);
        good.push_back(ChamberPoint::normalized(points[i], ChamberPoint::Region::APlus));
        where.push_back(i);
      } catch (const Error&) {
      }
    }
    if (good.empty()) return;
    try {
      const auto vals = ho_F_connection_batch(lambda_, k_, good, opts_);
      for (std::size_t j = 0; j < vals.size(); ++j) cache_[points[where[j]]] = vals[j];
    } catch (const Error&) {
      // Per-point evaluation reports the error.
    }
  }
  Outcome eval(const std::vector<double>& p) override {
    require_arity(p, n_);
    const auto z = ChamberPoint::normalized(p, ChamberPoint::Region::APlus);
    const auto it = cache_.find(p);
    const ConnectionValue v = it != cache_.end()
                                  ? it->second
                                  : ho_F_connection_batch(lambda_, k_, std::span(&z, 1), opts_)[0];
    return {v.value, v.height, 0.0, {}};
  }

 private:
  int n_;
  double k_ = 0;
  QuadWeight lambda_;
  ConnectionOptions opts_;
  std::map<std::vector<double>, ConnectionValue> cache_;
};

class DegenerateFunction : public Function {
 public:
  DegenerateFunction(const ParamReader& r, int n, double tol)
      : n_(n), nu_(r.real("nu")), k_(r.real("k")), tol_(series_tol(tol)) {
    if (n_ < 2) throw Error(ErrorKind::Usage, "F-degenerate needs --n >= 2");
  }
  int arity() const override { return n_; }
  std::vector<double> ray(double t) const override { return rho_ray(n_, t); }
  Outcome eval(const std::vector<double>& p) override {
    require_arity(p, n_);
    const auto v = ho_F_degenerate_eval<double>(n_, nu_, k_, p, tol_);
    return {v.value, v.degree, v.tail, {}};
  }

 private:
  int n_;
  double nu_, k_;
  Tolerance tol_;
};

Partition parse_partition(const ParamReader& r) {
  std::vector<int> parts;
  for (const auto& s : split(r.raw("partition"), ", ")) {
    const double v = parse_double(s, "partition part");
    if (v != std::floor(v)) throw Error(ErrorKind::Usage, "partition parts must be integers");
    parts.push_back(static_cast<int>(v));
  }
  return Partition(std::move(parts));
}

class JackFunction : public Function {
 public:
  JackFunction(const ParamReader& r, int n, bool on_A) : n_(n), on_A_(on_A) {
    if (n_ < 1) throw Error(ErrorKind::Usage, "give the number of variables with --n");
    poly_ = jack_polynomial(parse_partition(r), n_, r.exact("k"));
    multi_ = poly_.to_multi();
  }
  int arity() const override { return n_; }
  std::vector<double> ray(double t) const override { return rho_ray(n_, t); }
  Outcome eval(const std::vector<double>& p) override {
    if (p.empty()) return {std::nan(""), 0, 0.0, poly_.to_string()};
    require_arity(p, n_);
    if (on_A_) ChamberPoint(p, ChamberPoint::Region::A, 1e-9);
    return {multi_.evaluate(p), 0, 0.0, {}};
  }

 private:
  int n_;
  bool on_A_;
  SymPoly poly_{0, 0};
  MultiPoly multi_;
};

const std::vector<std::string> kFunctions = {"fd",           "2f1", "f1",  "g2",   "phi",
                                             "c",            "F-connection", "F-degenerate",
                                             "jack",         "jacobi"};

std::unique_ptr<Function> make_function(const RunConfig& cfg) {
  Params p;
  for (const auto& kv : cfg.params) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw Error(ErrorKind::Usage, "--param expects key=value, got \"" + kv + "\"");
    }
    p[kv.substr(0, eq)] = kv.substr(eq + 1);
  }
  if (!cfg.k.empty()) p["k"] = cfg.k;
  if (!cfg.nu.empty()) p["nu"] = cfg.nu;
  const std::string& fn = cfg.fn;
  const bool exact = fn == "jack" || fn == "jacobi";
  if (fn == "fd") return std::make_unique<FdFunction>(ParamReader(fn, p, exact), cfg.tol, 0);
  if (fn == "2f1") return std::make_unique<Gauss>(ParamReader(fn, Gauss::remap(p), exact), cfg.tol);
  if (fn == "f1") return std::make_unique<FdFunction>(ParamReader(fn, p, exact), cfg.tol, 2);
  if (fn == "g2") return std::make_unique<G2Function>(ParamReader(fn, p, exact), cfg.tol);
  if (fn == "phi") {
    return std::make_unique<PhiFunction>(ParamReader(fn, p, exact), cfg.n, cfg.height, cfg.tol);
  }
  if (fn == "c") return std::make_unique<CFunction>(ParamReader(fn, p, exact), cfg.n);
  if (fn == "F-connection") {
    return std::make_unique<ConnectionFunction>(ParamReader(fn, p, exact), cfg.n, cfg.height,
                                                cfg.tol);
  }
  if (fn == "F-degenerate") {
    return std::make_unique<DegenerateFunction>(ParamReader(fn, p, exact), cfg.n, cfg.tol);
  }
  if (fn == "jack") return std::make_unique<JackFunction>(ParamReader(fn, p, exact), cfg.n, false);
  if (fn == "jacobi") {
    return std::make_unique<JackFunction>(ParamReader(fn, p, exact), cfg.n, true);
  }
  std::string known;
  for (const auto& f : kFunctions) known += (known.empty() ? "" : ", ") + f;
  throw Error(ErrorKind::Usage, "unknown function '" + fn + "' (known: " + known + ")");
}

// ---------------------------------------------------------------------------
// Points and grids

std::vector<std::vector<double>> read_points_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Io, "cannot read points file " + path);
  std::vector<std::vector<double>> out;
  std::string line;
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    out.push_back(parse_list(line, "point coordinate"));
  }
  return out;
}

struct GridAxis {
  std::string name;
  std::vector<double> values;
};

GridAxis parse_grid(const std::string& spec) {
  const auto eq = spec.find('=');
  if (eq == std::string::npos) {
    throw Error(ErrorKind::Usage, "grid spec must look like t=a:b:N or x2=a:b:N");
  }
  GridAxis axis{spec.substr(0, eq), {}};
  const auto parts = split(spec.substr(eq + 1), ":");
  if (parts.size() != 3) throw Error(ErrorKind::Usage, "grid range must be a:b:N");
  const double a = parse_double(parts[0], "grid start");
  const double b = parse_double(parts[1], "grid end");
  const double count = parse_double(parts[2], "grid size");
  if (count < 0 || count != std::floor(count)) {
    throw Error(ErrorKind::Usage, "grid size must be a nonnegative integer");
  }
  const int N = static_cast<int>(count);
  for (int i = 0; i < N; ++i) axis.values.push_back(N == 1 ? a : a + (b - a) * i / (N - 1));
  if (axis.name != "t" && (axis.name.size() < 2 || axis.name[0] != 'x')) {
    throw Error(ErrorKind::Usage, "grid variable must be t or x1, x2, ...");
  }
  return axis;
}

std::vector<std::vector<double>> grid_points(const std::vector<std::string>& specs,
                                             const std::vector<double>& base, const Function& f) {
  std::vector<GridAxis> axes;
  for (const auto& s : specs) axes.push_back(parse_grid(s));
  std::vector<std::vector<double>> out;
  std::vector<std::size_t> idx(axes.size(), 0);
  for (const auto& a : axes)
    if (a.values.empty()) return out;
  for (;;) {
    std::vector<double> p = base;
    for (std::size_t g = 0; g < axes.size(); ++g) {
      const double v = axes[g].values[idx[g]];
      if (axes[g].name == "t") {
        p = f.ray(v);
      } else {
        const int i = static_cast<int>(parse_double(axes[g].name.substr(1), "grid coordinate"));
        if (i < 1 || i > static_cast<int>(p.size())) {
          throw Error(ErrorKind::Usage, "grid coordinate " + axes[g].name +
                                            " needs a --point base with that many coordinates");
        }
        p[i - 1] = v;
      }
    }
    out.push_back(std::move(p));
    std::size_t g = axes.size();
    while (g > 0 && ++idx[g - 1] == axes[g - 1].values.size()) idx[--g] = 0;
    if (g == 0) break;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Records

struct Record {
  std::vector<double> point;
  std::optional<Outcome> outcome;
  std::string error_kind, error_detail;
};

class Writer {
 public:
  Writer(std::ostream& os, std::string format, const RunConfig& cfg)
      : os_(os), csv_(format == "csv"), cfg_(cfg) {}

  void write_all(const std::vector<Record>& records) {
    if (csv_) write_csv(records);
    else
      for (const auto& r : records) write_json(r);
  }

 private:
  std::string inputs_json(const Record& r) const {
    std::string s = "{\"fn\": " + quoted(cfg_.fn);
    if (cfg_.n) s += ", \"n\": " + std::to_string(cfg_.n);
    if (!cfg_.k.empty()) s += ", \"k\": " + quoted(cfg_.k);
    if (!cfg_.nu.empty()) s += ", \"nu\": " + quoted(cfg_.nu);
    for (const auto& kv : cfg_.params) {
      const auto eq = kv.find('=');
      s += ", " + quoted(kv.substr(0, eq)) + ": " + quoted(kv.substr(eq + 1));
    }
    s += ", \"point\": [";
    for (std::size_t i = 0; i < r.point.size(); ++i) s += (i ? ", " : "") + num(r.point[i]);
    return s + "]}";
  }

  void write_json(const Record& r) {
    os_ << "{\"inputs\": " << inputs_json(r) << ", \"value\": ";
    if (r.outcome && r.outcome->polynomial.empty()) {
      os_ << "{\"re\": " << num(r.outcome->value.real()) << ", \"im\": "
          << num(r.outcome->value.imag()) << "}";
    } else {
      os_ << "null";
    }
    if (r.outcome && !r.outcome->polynomial.empty()) {
      os_ << ", \"polynomial\": " << quoted(r.outcome->polynomial);
    }
    os_ << ", \"height\": " << (r.outcome ? r.outcome->height : 0)
        << ", \"tail\": " << (r.outcome ? num(r.outcome->tail) : "null") << ", \"error\": ";
    if (r.outcome) {
      os_ << "null";
    } else {
      os_ << "{\"kind\": " << quoted(r.error_kind) << ", \"detail\": " << quoted(r.error_detail)
          << "}";
    }
    os_ << "}\n";
  }

  void write_csv(const std::vector<Record>& records) {
    std::size_t dim = 0;
    for (const auto& r : records) dim = std::max(dim, r.point.size());
    os_ << "index";
    for (std::size_t i = 1; i <= dim; ++i) os_ << ",p" << i;
    os_ << ",re,im,height,tail,error_kind,error_detail\n";
    for (std::size_t j = 0; j < records.size(); ++j) {
      const auto& r = records[j];
      os_ << j;
      for (std::size_t i = 0; i < dim; ++i)
        os_ << "," << (i < r.point.size() ? csv_num(r.point[i]) : "");
      if (r.outcome) {
        const bool poly = !r.outcome->polynomial.empty();
        os_ << "," << (poly ? csv_field(r.outcome->polynomial) : csv_num(r.outcome->value.real()))
            << "," << (poly ? "" : csv_num(r.outcome->value.imag())) << ","
            << r.outcome->height << "," << csv_num(r.outcome->tail) << ",,";
      } else {
        os_ << ",,,,," << csv_field(r.error_kind) << "," << csv_field(r.error_detail);
      }
      os_ << "\n";
    }
  }

  std::ostream& os_;
  bool csv_;
  const RunConfig& cfg_;
};

struct Output {
  std::ofstream file;
  std::ostream* os = nullptr;

  Output(const std::string& path, std::ostream& fallback) {
    if (path.empty() || path == "-") {
      os = &fallback;
      return;
    }
    file.open(path);
    if (!file) throw Error(ErrorKind::Io, "cannot write to " + path);
    os = &file;
  }
};

int cmd_eval(const RunConfig& cfg, bool table, std::ostream& out) {
  auto f = make_function(cfg);
  std::vector<std::vector<double>> points;
  for (const auto& p : cfg.points) points.push_back(parse_list(p, "point coordinate"));
  if (!cfg.points_file.empty()) {
    auto more = read_points_file(cfg.points_file);
    points.insert(points.end(), more.begin(), more.end());
  }
  if (!cfg.grids.empty()) {
    const std::vector<double> base = points.empty() ? std::vector<double>{} : points.front();
    points = grid_points(cfg.grids, base, *f);
  } else if (table) {
    throw Error(ErrorKind::Usage, "table needs --grid");
  }
  if (points.empty() && f->arity() == 0) points.emplace_back();
  if (points.empty() && cfg.grids.empty() && cfg.fn == "jack") points.emplace_back();
  if (points.empty() && cfg.grids.empty()) {
    throw Error(ErrorKind::Usage, "give --point, --points or --grid");
  }

  f->prepare(points);
  std::vector<Record> records;
  bool failed = false;
  for (const auto& p : points) {
    Record r{p, std::nullopt, {}, {}};
    try {
      r.outcome = f->eval(p);
    } catch (const Error& e) {
      r.error_kind = std::string(to_string(e.kind()));
      r.error_detail = e.what();
      failed = true;
    }
    records.push_back(std::move(r));
  }
  Output o(cfg.out_path, out);
  Writer(*o.os, cfg.format.empty() ? (table ? "csv" : "json") : cfg.format, cfg)
      .write_all(records);
  return failed ? 1 : 0;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  const std::string suite = !cfg.suite.empty() ? cfg.suite : cfg.fn.empty() ? "all" : cfg.fn;
  SuiteOptions opts;
  opts.seed = cfg.seed;
  opts.flip_rho_sign = cfg.flip_rho;
  const auto lines = run_suite(suite, opts);
  Output o(cfg.out_path, out);
  std::size_t failed = 0;
  for (const auto& l : lines) {
    failed += !l.pass;
    if (cfg.format == "json") {
      *o.os << "{\"suite\": " << quoted(l.suite) << ", \"criterion\": " << l.criterion
            << ", \"name\": " << quoted(l.name) << ", \"pass\": " << (l.pass ? "true" : "false")
            << ", \"measured\": " << num(l.measured) << ", \"tolerance\": " << num(l.tolerance)
            << ", \"detail\": " << quoted(l.detail) << "}\n";
    } else if (cfg.format == "csv") {
      *o.os << csv_field(l.suite) << "," << l.criterion << "," << csv_field(l.name) << ","
            << (l.pass ? "pass" : "fail") << "," << csv_num(l.measured) << ","
            << csv_num(l.tolerance) << "," << csv_field(l.detail) << "\n";
    } else {
      *o.os << format_check(l) << "\n";
    }
  }
  if (cfg.format != "json" && cfg.format != "csv") {
    *o.os << lines.size() - failed << "/" << lines.size() << " checks passed\n";
  }
  return failed ? 1 : 0;
}

void add_eval_options(CLI::App& sub, RunConfig& cfg) {
  sub.add_option("--fn", cfg.fn, "function name")->required();
  sub.add_option("--n", cfg.n, "rank plus one (number of coordinates)");
  sub.add_option("--k", cfg.k, "multiplicity k");
  sub.add_option("--nu", cfg.nu, "degenerate spectral parameter nu");
  sub.add_option("--param", cfg.params, "extra parameter key=value (repeatable)");
  sub.add_option("--point", cfg.points, "comma-separated point (repeatable)");
  sub.add_option("--points", cfg.points_file, "file with one point per line");
  sub.add_option("--grid", cfg.grids, "t=a:b:N or xI=a:b:N (repeatable, cartesian product)");
  sub.add_option("--height", cfg.height, "maximal series height");
  sub.add_option("--tol", cfg.tol, "series tolerance");
  sub.add_option("--seed", cfg.seed, "random seed");
  sub.add_option("--out", cfg.out_path, "output file (default stdout)");
  sub.add_option("--format", cfg.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Heckman-Opdam hypergeometric functions of type A with degenerate parameter"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* eval = app.add_subcommand("eval", "evaluate a function at points");
  add_eval_options(*eval, cfg);
  auto* table = app.add_subcommand("table", "tabulate a function over a grid");
  add_eval_options(*table, cfg);

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", cfg.suite, "suite name or all");
  verify->add_option("--fn", cfg.fn, "suite name (same as the positional argument)");
  verify->add_option("--seed", cfg.seed, "random seed");
  verify->add_option("--out", cfg.out_path, "output file (default stdout)");
  verify->add_option("--format", cfg.format, "text, json or csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  verify->add_flag("--inject-rho-sign-error", cfg.flip_rho,
                   "negative control: flip the sign of rho in theorem-2-2");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (verify->parsed()) return cmd_verify(cfg, out);
    return cmd_eval(cfg, table->parsed(), out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::Usage ? 2 : 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace hofd
