#include "wscatter/potentials.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

namespace wscatter {

namespace {

constexpr const char* kMagic = "# wronskian-scatter potential v1";

void check_finite_x(double x) {
  if (!std::isfinite(x)) throw InvalidInput("potential evaluated at non-finite x");
}

std::string fmt_g17(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

std::string family_name(PotentialFamily family) {
  switch (family) {
    case PotentialFamily::Free: return "free";
    case PotentialFamily::GaussianBarrier: return "gaussian-barrier";
    case PotentialFamily::GaussianWell: return "gaussian-well";
    case PotentialFamily::SechSquaredWell: return "sech2-well";
    case PotentialFamily::SquareBarrier: return "square-barrier";
    case PotentialFamily::Step: return "step";
    case PotentialFamily::Tabulated: return "tabulated";
  }
  return "unknown";
}

Dimensionless nondimensionalize(const PhysicalParams& p) {
  if (!(p.mass > 0.0)) throw InvalidParams("mass must be positive");
  if (!(p.hbar > 0.0)) throw InvalidParams("hbar must be positive");
  if (!(p.alpha > 0.0)) throw InvalidParams("alpha must be positive");
  if (!(p.length_scale > 0.0)) throw InvalidParams("length scale must be positive");
  const double scale = p.mass / (p.hbar * p.hbar * p.alpha);
  Dimensionless d{p.v0 * scale, p.energy * scale};
  if (!std::isfinite(d.v0) || !std::isfinite(d.epsilon))
    throw InvalidParams("non-finite dimensionless parameters");
  return d;
}

TabulatedPotential::TabulatedPotential(std::vector<double> nodes,
                                       std::vector<double> values,
                                       double v_minus, double v_plus,
                                       double tail_tol)
    : x_(std::move(nodes)),
      y_(std::move(values)),
      v_minus_(v_minus),
      v_plus_(v_plus),
      tail_tol_(tail_tol) {
  const std::size_t n = x_.size();
  if (n < 4) throw ParseError("tabulated potential needs at least 4 nodes", 0);
  if (y_.size() != n) throw InvalidGrid("node/value count mismatch");
  for (std::size_t i = 0; i + 1 < n; ++i)
    if (!(x_[i] < x_[i + 1])) throw InvalidGrid("x values must be strictly increasing");
  if (std::abs(y_.front() - v_minus_) > tail_tol_ ||
      std::abs(y_.back() - v_plus_) > tail_tol_)
    throw TailMismatch("boundary samples do not match declared asymptotes");

  // Natural cubic spline: tridiagonal solve for second derivatives.
  d2_.assign(n, 0.0);
  std::vector<double> u(n, 0.0);
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double sig = (x_[i] - x_[i - 1]) / (x_[i + 1] - x_[i - 1]);
    const double p = sig * d2_[i - 1] + 2.0;
    d2_[i] = (sig - 1.0) / p;
    const double slope_r = (y_[i + 1] - y_[i]) / (x_[i + 1] - x_[i]);
    const double slope_l = (y_[i] - y_[i - 1]) / (x_[i] - x_[i - 1]);
    u[i] = (6.0 * (slope_r - slope_l) / (x_[i + 1] - x_[i - 1]) - sig * u[i - 1]) / p;
  }
  for (std::size_t i = n - 1; i-- > 1;) d2_[i] = d2_[i] * d2_[i + 1] + u[i];
  d2_.front() = d2_.back() = 0.0;
}

double TabulatedPotential::evaluate(double x) const {
  check_finite_x(x);
  if (x <= x_.front()) return x < x_.front() ? v_minus_ : y_.front();
  if (x >= x_.back()) return x > x_.back() ? v_plus_ : y_.back();
  std::size_t lo = 0, hi = x_.size() - 1;
  while (hi - lo > 1) {
    const std::size_t mid = (lo + hi) / 2;
    if (x_[mid] > x) hi = mid; else lo = mid;
  }
  const double dx = x_[hi] - x_[lo];
  const double a = (x_[hi] - x) / dx;
  const double b = (x - x_[lo]) / dx;
  return a * y_[lo] + b * y_[hi] +
         ((a * a * a - a) * d2_[lo] + (b * b * b - b) * d2_[hi]) * dx * dx / 6.0;
}

TabulatedPotential TabulatedPotential::load(std::istream& in) {
  std::string line;
  int lineno = 0;

  if (!std::getline(in, line)) throw ParseError("empty input", 1);
  ++lineno;
  if (line == std::string(kMagic) + "\r") line.pop_back();
  if (line != kMagic) throw ParseError("missing magic header", lineno);

  if (!std::getline(in, line)) throw ParseError("missing parameter line", 2);
  ++lineno;
  std::istringstream hdr(line);
  std::string key_vm, key_vp, key_tt;
  double v_minus = 0.0, v_plus = 0.0, tail_tol = 0.0;
  hdr >> key_vm >> v_minus >> key_vp >> v_plus >> key_tt >> tail_tol;
  if (hdr.fail() || key_vm != "v_minus" || key_vp != "v_plus" || key_tt != "tail_tol")
    throw ParseError("malformed parameter line", lineno);

  std::vector<double> xs, ys;
  double prev_x = 0.0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::istringstream row(line);
    double x, v;
    row >> x >> v;
    if (row.fail()) throw ParseError("malformed data row", lineno);
    if (!xs.empty() && !(x > prev_x)) throw InvalidGrid("x values must be strictly increasing");
    xs.push_back(x);
    ys.push_back(v);
    prev_x = x;
  }
  if (xs.size() < 4) throw ParseError("tabulated potential needs at least 4 nodes", lineno);
  return TabulatedPotential(std::move(xs), std::move(ys), v_minus, v_plus, tail_tol);
}

void TabulatedPotential::serialize(std::ostream& out) const {
  out << kMagic << '\n';
  out << "v_minus " << fmt_g17(v_minus_) << " v_plus " << fmt_g17(v_plus_)
      << " tail_tol " << fmt_g17(tail_tol_) << '\n';
  for (std::size_t i = 0; i < x_.size(); ++i)
    out << fmt_g17(x_[i]) << '\t' << fmt_g17(y_[i]) << '\n';
}

TabulatedPotential load_tabulated(std::istream& in) {
  return TabulatedPotential::load(in);
}

PotentialModel PotentialModel::free() {
  return PotentialModel(PotentialFamily::Free, 0.0, 0.0, 0.0, 0.0, true);
}

PotentialModel PotentialModel::gaussian_barrier(double v0) {
  if (!(v0 >= 0.0)) throw InvalidParams("gaussian barrier needs v0 >= 0");
  return PotentialModel(PotentialFamily::GaussianBarrier, v0, 0.0, 0.0, 0.0, true);
}

PotentialModel PotentialModel::gaussian_well(double v0) {
  if (!(v0 >= 0.0)) throw InvalidParams("gaussian well needs v0 >= 0");
  return PotentialModel(PotentialFamily::GaussianWell, v0, 0.0, 0.0, 0.0, true);
}

PotentialModel PotentialModel::sech2_well(double v0) {
  if (!(v0 >= 0.0)) throw InvalidParams("sech2 well needs v0 >= 0");
  return PotentialModel(PotentialFamily::SechSquaredWell, v0, 0.0, 0.0, 0.0, true);
}

PotentialModel PotentialModel::square_barrier(double v0, double width) {
  if (!(v0 >= 0.0)) throw InvalidParams("square barrier needs v0 >= 0");
  if (!(width > 0.0)) throw InvalidParams("square barrier needs positive width");
  return PotentialModel(PotentialFamily::SquareBarrier, v0, width, 0.0, 0.0, true);
}

PotentialModel PotentialModel::step(double v_minus, double v_plus) {
  if (!std::isfinite(v_minus) || !std::isfinite(v_plus))
    throw InvalidParams("step levels must be finite");
  return PotentialModel(PotentialFamily::Step, 0.0, 0.0, v_minus, v_plus,
                        v_minus == v_plus);
}

PotentialModel PotentialModel::tabulated(TabulatedPotential table) {
  PotentialModel m(PotentialFamily::Tabulated, 0.0, 0.0, table.v_minus(),
                   table.v_plus(), false);
  m.table_ = std::make_shared<const TabulatedPotential>(std::move(table));
  return m;
}

double PotentialModel::evaluate(double x) const {
  check_finite_x(x);
  switch (family_) {
    case PotentialFamily::Free:
      return 0.0;
    case PotentialFamily::GaussianBarrier:
      return v0_ * std::exp(-x * x);
    case PotentialFamily::GaussianWell:
      return -v0_ * std::exp(-x * x);
    case PotentialFamily::SechSquaredWell: {
      const double c = std::cosh(x);
      return -v0_ / (c * c);
    }
    case PotentialFamily::SquareBarrier:
      return (x >= -width_ / 2 && x <= width_ / 2) ? v0_ : 0.0;
    case PotentialFamily::Step:
      return x < 0.0 ? v_minus_ : v_plus_;
    case PotentialFamily::Tabulated:
      return table_->evaluate(x);
  }
  throw InvalidInput("unknown potential family");
}

}  // namespace wscatter
