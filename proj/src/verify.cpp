#include "discfrac/verify.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <optional>
#include <random>

#include "discfrac/error.hpp"
#include "discfrac/glbinomial.hpp"
#include "discfrac/grid.hpp"
#include "discfrac/io.hpp"
#include "discfrac/riemann.hpp"
#include "discfrac/specfun.hpp"

namespace discfrac {

namespace {

using Rng = std::mt19937_64;
using nlohmann::json;

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr int kMaxLength = 32;
constexpr int kDiscardFactor = 50;

struct Trial {
  double error;
  json input;
};
// nullopt: the sample violates the identity's hypotheses and is discarded.
using TrialFn = std::function<std::optional<Trial>(Rng&)>;

struct Entry {
  IdentityCheck check;
  TrialFn run;
};

// ---------------------------------------------------------------- sampling

double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

int uniform_int(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

bool coin(Rng& rng, double p) { return uniform(rng, 0.0, 1.0) < p; }

// alpha in (lo, hi), at least 1e-3 away from every integer.
double fractional_alpha(Rng& rng, double lo, double hi) {
  for (;;) {
    const double a = uniform(rng, lo, hi);
    if (std::abs(a - std::round(a)) > 1e-3) return a;
  }
}

// Mostly fractional orders in (0, 3), occasionally an integer order.
double any_alpha(Rng& rng) {
  if (coin(rng, 0.15)) return static_cast<double>(uniform_int(rng, 1, 3));
  return fractional_alpha(rng, 0.0, 3.0);
}

double random_anchor(Rng& rng) { return uniform(rng, -4.0, 4.0); }

std::vector<double> random_values(Rng& rng, std::size_t n) {
  std::vector<double> v(n);
  for (auto& x : v) x = uniform(rng, -1.0, 1.0);
  return v;
}

std::size_t length_for(Rng& rng, const Order& order, Kind kind, int max_length = kMaxLength) {
  const int lo = kind == Kind::difference ? order.n() + 1 : 1;
  return static_cast<std::size_t>(uniform_int(rng, lo, std::max(lo, max_length)));
}

// Input on N_a (left) or ending at b (right).
GridFunction random_input(Rng& rng, Side side, double anchor, std::size_t length) {
  const double origin = side == Side::left ? anchor : anchor - static_cast<double>(length - 1);
  return GridFunction(origin, random_values(rng, length));
}

OperatorSpec make_spec(Family family, Side side, Kind kind, Formulation formulation,
                       double alpha, double anchor) {
  return OperatorSpec{family, side, kind, formulation, Order(alpha), anchor};
}

// ------------------------------------------------------------- comparison

// Max relative error over the grid points shared by both sequences.
double compare(const GridFunction& lhs, const GridFunction& rhs) {
  if (!alignable(lhs, rhs)) return kInf;
  const long offset = std::lround(rhs.origin() - lhs.origin());
  double worst = 0.0;
  bool any = false;
  for (std::size_t j = 0; j < lhs.size(); ++j) {
    const long k = static_cast<long>(j) - offset;
    if (k < 0 || k >= static_cast<long>(rhs.size())) continue;
    any = true;
    worst = std::max(worst, relative_error(lhs[j], rhs[static_cast<std::size_t>(k)]));
  }
  return any ? worst : kInf;
}

// Same grid exactly, then compare.
double compare_same_grid(const GridFunction& lhs, const GridFunction& rhs) {
  if (!same_point(lhs.origin(), rhs.origin()) || lhs.size() != rhs.size()) return kInf;
  return compare(lhs, rhs);
}

json spec_json(const OperatorSpec& spec) {
  return {{"family", to_string(spec.family)},
          {"side", to_string(spec.side)},
          {"kind", to_string(spec.kind)},
          {"formulation", to_string(spec.formulation)},
          {"alpha", round_output(spec.order.alpha())},
          {"anchor", round_output(spec.anchor)}};
}

json scalars(std::initializer_list<std::pair<const char*, double>> items) {
  json j = json::object();
  for (const auto& [k, v] : items) j[k] = round_output(v);
  return j;
}

GridFunction negated(GridFunction f) {
  for (std::size_t j = 0; j < f.size(); ++j) f[j] = -f[j];
  return f;
}

// Input widened by one never-read sample (NaN) on the anchor side.
GridFunction with_phantom(const GridFunction& f, Side side) {
  std::vector<double> v(f.values().begin(), f.values().end());
  const double nan = std::numeric_limits<double>::quiet_NaN();
  if (side == Side::left) {
    v.insert(v.begin(), nan);
    return GridFunction(f.origin() - 1.0, std::move(v));
  }
  v.push_back(nan);
  return GridFunction(f.origin(), std::move(v));
}

// Inequality violation measured like a relative error; 0 when lhs <= rhs.
double violation(double lhs, double rhs) {
  if (!std::isfinite(lhs) || !std::isfinite(rhs)) return kInf;
  return std::max(0.0, lhs - rhs) / std::max({std::abs(lhs), std::abs(rhs), 1.0});
}

template <class F>
std::optional<double> guarded(F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::kernel_singularity) return std::nullopt;
    throw;
  }
}

// ---------------------------------------------------------- trial builders

TrialFn equivalence(Family family, Side side) {
  return [=](Rng& rng) -> std::optional<Trial> {
    const double alpha = fractional_alpha(rng, 0.0, 3.0);
    const double anchor = random_anchor(rng);
    const auto f = random_input(rng, side, anchor, length_for(rng, Order(alpha), Kind::difference));
    double err = 0.0;
    for (Kind kind : {Kind::sum, Kind::difference}) {
      const auto rs = make_spec(family, side, kind, Formulation::riemann, alpha, anchor);
      auto bs = rs;
      bs.formulation = Formulation::binomial;
      err = std::max(err, compare_same_grid(riemann_apply(rs, f), gl_apply(bs, f)));
    }
    return Trial{err, {{"spec", spec_json(make_spec(family, side, Kind::difference,
                                                     Formulation::riemann, alpha, anchor))},
                       {"f", to_json(f)}}};
  };
}

// Dual identities: delta operators as shifted nabla operators.
TrialFn dual_identity(Side side, Kind kind) {
  return [=](Rng& rng) -> std::optional<Trial> {
    const double alpha = any_alpha(rng);
    const double anchor = random_anchor(rng);
    const auto y = random_input(rng, side, anchor, length_for(rng, Order(alpha), kind));
    const auto ds = make_spec(Family::delta, side, kind, Formulation::riemann, alpha, anchor);
    const double nabla_anchor = side == Side::left ? anchor - 1.0 : anchor + 1.0;
    const auto ns = make_spec(Family::nabla, side, kind, Formulation::riemann, alpha, nabla_anchor);
    // Left: sums shift by -alpha, differences by +alpha; right: the opposite.
    const bool plus = (side == Side::left) == (kind == Kind::difference);
    const auto lhs = riemann_apply(ds, y).shifted(plus ? alpha : -alpha);
    const auto rhs = riemann_apply(ns, with_phantom(y, side));
    return Trial{compare(lhs, rhs), {{"spec", spec_json(ds)}, {"f", to_json(y)}}};
  };
}

// Left operator conjugated by Q equals the right operator.
TrialFn q_identity(Family family, Kind kind, Formulation formulation) {
  return [=](Rng& rng) -> std::optional<Trial> {
    const double alpha = any_alpha(rng);
    const double a = random_anchor(rng);
    const std::size_t L = length_for(rng, Order(alpha), kind);
    const double b = a + static_cast<double>(L - 1);
    const auto q = AnchorPair::make(a, b);
    const GridFunction f(a, random_values(rng, L));
    const auto left = make_spec(family, Side::left, kind, formulation, alpha, a);
    const auto right = make_spec(family, Side::right, kind, formulation, alpha, b);
    auto apply = [&](const OperatorSpec& s, const GridFunction& g) {
      return formulation == Formulation::riemann ? riemann_apply(s, g) : gl_apply(s, g);
    };
    double err = 0.0;
    // Q(left(Q f)) == right(f), and left(Q f) == Q(right f)
    err = std::max(err, compare_same_grid(apply(left, q_reflect(f, q)), q_reflect(apply(right, f), q)));
    return Trial{err, {{"spec", spec_json(left)}, {"b", round_output(b)}, {"f", to_json(f)}}};
  };
}

TrialFn alt_form(Family family, Side side) {
  return [=](Rng& rng) -> std::optional<Trial> {
    const double alpha = fractional_alpha(rng, 0.0, 3.0);
    const double anchor = random_anchor(rng);
    const auto f = random_input(rng, side, anchor, length_for(rng, Order(alpha), Kind::difference));
    const auto spec = make_spec(family, side, Kind::difference, Formulation::riemann, alpha, anchor);
    return Trial{compare_same_grid(riemann_diff(spec, f), riemann_diff_alt(spec, f)),
                 {{"spec", spec_json(spec)}, {"f", to_json(f)}}};
  };
}

// n-fold sums solve the n-th order initial value problems with zero data.
TrialFn ivp(Family family, Side side) {
  return [=](Rng& rng) -> std::optional<Trial> {
    const int n = uniform_int(rng, 1, 3);
    const double anchor = random_anchor(rng);
    const int min_len = family == Family::nabla ? 2 : 1;
    const auto L = static_cast<std::size_t>(uniform_int(rng, min_len, kMaxLength));
    const auto f = random_input(rng, side, anchor, L);
    const auto spec = make_spec(family, side, Kind::sum, Formulation::riemann, n, anchor);
    const double nd = n;
    const double Ld = static_cast<double>(L);

    // Evaluation window, including the points where the sum is empty.
    double first = 0.0;
    std::size_t count = 0;
    if (family == Family::delta) {
      first = side == Side::left ? anchor : anchor - (Ld - 1.0) - nd;
      count = L + static_cast<std::size_t>(n);
    } else {
      first = side == Side::left ? anchor - nd + 1.0 : anchor - (Ld - 1.0);
      count = L + static_cast<std::size_t>(n) - 1;
    }
    std::vector<double> u(count);
    for (std::size_t j = 0; j < count; ++j) {
      u[j] = riemann_sum_at(spec, f, first + static_cast<double>(j));
    }
    const GridFunction U(first, std::move(u));

    bool initial_ok = true;
    GridFunction residual_lhs = U;
    if (family == Family::delta) {
      // u(a+j-1) = 0 (left) / u(b-j+1) = 0 (right), j = 1..n
      for (int j = 1; j <= n; ++j) {
        const double t = side == Side::left ? anchor + j - 1 : anchor - j + 1;
        initial_ok = initial_ok && U.at(t) == 0.0;
      }
      residual_lhs = side == Side::left ? iterate_diff(U, DiffOp::delta, n)
                                        : iterate_diff(U, DiffOp::nabla, n, true);
    } else {
      // i-th (signed) difference vanishes at the anchor, i = 0..n-1
      for (int i = 0; i < n; ++i) {
        const GridFunction D =
            i == 0 ? U
                   : (side == Side::left ? iterate_diff(U, DiffOp::nabla, i)
                                         : iterate_diff(U, DiffOp::delta, i, true));
        initial_ok = initial_ok && D.at(anchor) == 0.0;
      }
      residual_lhs = side == Side::left ? iterate_diff(U, DiffOp::nabla, n)
                                        : iterate_diff(U, DiffOp::delta, n, true);
    }
    const double err = initial_ok ? compare(residual_lhs, f) : kInf;
    return Trial{err, {{"spec", spec_json(spec)}, {"f", to_json(f)}}};
  };
}

// Classical n-fold unit sums with zero initial values; independent of the
// fractional kernels.
GridFunction iterated_unit_sum(Family family, Side side, const GridFunction& f, int n) {
  std::vector<double> cur(f.values().begin(), f.values().end());
  if (side == Side::right) std::reverse(cur.begin(), cur.end());
  for (int i = 0; i < n; ++i) {
    if (family == Family::delta) {
      // u(t) = sum_{s=a}^{t-1} u_prev(s), grid grows by one point
      std::vector<double> next(cur.size() + 1, 0.0);
      for (std::size_t j = 1; j < next.size(); ++j) next[j] = next[j - 1] + cur[j - 1];
      cur = std::move(next);
    } else {
      // u(t) = sum_{s=a+1}^{t} u_prev(s)
      std::vector<double> next(cur.size(), 0.0);
      for (std::size_t j = 1; j < next.size(); ++j) next[j] = next[j - 1] + cur[j];
      cur = std::move(next);
    }
  }
  if (side == Side::left) return GridFunction(f.origin(), cur);
  std::reverse(cur.begin(), cur.end());
  return GridFunction(f.end() - static_cast<double>(cur.size() - 1), cur);
}

std::optional<Trial> integer_order_trial(Rng& rng) {
  const int n = uniform_int(rng, 1, 3);
  const double anchor = random_anchor(rng);
  const auto L = static_cast<std::size_t>(uniform_int(rng, n + 1, kMaxLength));
  const Side side = coin(rng, 0.5) ? Side::left : Side::right;
  const auto f = random_input(rng, side, anchor, L);
  double err = 0.0;
  for (Family family : {Family::delta, Family::nabla}) {
    // nabla operators see the anchor sample as zero
    GridFunction g = f;
    if (family == Family::nabla) g[side == Side::left ? 0 : g.size() - 1] = 0.0;
    GridFunction classical_diff = [&] {
      if (family == Family::delta) {
        return side == Side::left ? iterate_diff(g, DiffOp::delta, n)
                                  : iterate_diff(g, DiffOp::nabla, n, true);
      }
      return side == Side::left ? iterate_diff(g, DiffOp::nabla, n)
                                : iterate_diff(g, DiffOp::delta, n, true);
    }();
    const GridFunction classical_sum = iterated_unit_sum(family, side, f, n);
    for (Formulation form : {Formulation::riemann, Formulation::binomial}) {
      for (Kind kind : {Kind::sum, Kind::difference}) {
        const auto spec = make_spec(family, side, kind, form, n, anchor);
        const auto out = form == Formulation::riemann ? riemann_apply(spec, f) : gl_apply(spec, f);
        const auto& ref = kind == Kind::sum ? classical_sum : classical_diff;
        double e = compare(out, ref);
        // The operator's whole output grid must be covered by the classical one.
        if (!ref.contains(out.origin()) || !ref.contains(out.end())) e = kInf;
        err = std::max(err, e);
      }
    }
  }
  return Trial{err, {{"alpha", n}, {"side", to_string(side)}, {"anchor", round_output(anchor)},
                     {"f", to_json(f)}}};
}

std::optional<Trial> fastpath_trial(Rng& rng) {
  const double alpha = coin(rng, 0.5) ? 0.3 : 1.7;
  constexpr std::size_t L = 4096;
  const double anchor = random_anchor(rng);
  const auto values = random_values(rng, L);
  double err = 0.0;
  for (Family family : {Family::delta, Family::nabla}) {
    for (Side side : {Side::left, Side::right}) {
      const double origin = side == Side::left ? anchor : anchor - static_cast<double>(L - 1);
      const GridFunction f(origin, values);
      for (Kind kind : {Kind::sum, Kind::difference}) {
        const auto spec = make_spec(family, side, kind, Formulation::binomial, alpha, anchor);
        err = std::max(err, compare_same_grid(gl_apply(spec, f), gl_apply_fast(spec, f)));
      }
    }
  }
  return Trial{err, {{"alpha", alpha}, {"anchor", round_output(anchor)}, {"length", L}}};
}

std::optional<Trial> domains_trial(Rng& rng) {
  const double alpha = any_alpha(rng);
  const Order order(alpha);
  const double anchor = random_anchor(rng);
  const auto L = static_cast<std::size_t>(uniform_int(rng, order.n() + 1, kMaxLength));
  const double nu = order.complement();
  const double nd = order.n();
  double err = 0.0;
  for (Family family : {Family::delta, Family::nabla}) {
    for (Side side : {Side::left, Side::right}) {
      const auto f = random_input(rng, side, anchor, L);
      for (Kind kind : {Kind::sum, Kind::difference}) {
        // Expected boundary point: first point for left, last point for right.
        double boundary = 0.0;
        if (kind == Kind::sum) {
          boundary = family == Family::delta ? (side == Side::left ? anchor + alpha : anchor - alpha)
                                             : anchor;
        } else if (family == Family::delta) {
          boundary = side == Side::left ? anchor + nu : anchor - nu;
        } else {
          boundary = side == Side::left ? anchor + nd : anchor - nd;
        }
        const std::size_t length = kind == Kind::sum ? L : L - order.n();
        for (Formulation form : {Formulation::riemann, Formulation::binomial}) {
          const auto spec = make_spec(family, side, kind, form, alpha, anchor);
          const auto out = form == Formulation::riemann ? riemann_apply(spec, f) : gl_apply(spec, f);
          const double got = side == Side::left ? out.origin() : out.end();
          if (!same_point(got, boundary) || out.size() != length) err = kInf;
        }
      }
    }
  }
  return Trial{err, {{"alpha", round_output(alpha)}, {"anchor", round_output(anchor)},
                     {"length", L}}};
}

// --------------------------------------------------- special-function trials

std::optional<Trial> scalar_trial(std::optional<double> err, json input) {
  if (!err) return std::nullopt;
  return Trial{*err, std::move(input)};
}

std::vector<Entry> build_registry() {
  std::vector<Entry> r;
  auto add = [&](std::string id, std::string description, std::string generator, double tol,
                 int trials, TrialFn fn) {
    r.push_back({IdentityCheck{std::move(id), std::move(description), std::move(generator), tol,
                               trials},
                 std::move(fn)});
  };
  const std::string seq = "random f uniform in [-1,1], L <= 32, anchor uniform in [-4,4]";

  add("thm2.5-1", "delta-left: Riemann sum/difference == binomial", seq + ", alpha in (0,3)\\{1,2}",
      1e-9, 200, equivalence(Family::delta, Side::left));
  add("thm2.5-2", "delta-right: Riemann sum/difference == binomial", seq + ", alpha in (0,3)\\{1,2}",
      1e-9, 200, equivalence(Family::delta, Side::right));
  add("thm2.5-3", "nabla-left: Riemann sum/difference == binomial", seq + ", alpha in (0,3)\\{1,2}",
      1e-9, 200, equivalence(Family::nabla, Side::left));
  add("thm2.5-4", "nabla-right: Riemann sum/difference == binomial", seq + ", alpha in (0,3)\\{1,2}",
      1e-9, 200, equivalence(Family::nabla, Side::right));

  add("lem1.5-i", "(delta_a^alpha y)(t-alpha) == nabla_{a-1}^alpha y(t)", seq + ", alpha in (0,3]",
      1e-10, 200, dual_identity(Side::left, Kind::difference));
  add("lem1.5-ii", "(delta_a^-alpha y)(t+alpha) == nabla_{a-1}^-alpha y(t)", seq + ", alpha in (0,3]",
      1e-10, 200, dual_identity(Side::left, Kind::sum));
  add("lem1.6-i", "(_b delta^alpha y)(t+alpha) == _{b+1} nabla^alpha y(t)", seq + ", alpha in (0,3]",
      1e-10, 200, dual_identity(Side::right, Kind::difference));
  add("lem1.6-ii", "(_b delta^-alpha y)(t-alpha) == _{b+1} nabla^-alpha y(t)",
      seq + ", alpha in (0,3]", 1e-10, 200, dual_identity(Side::right, Kind::sum));

  add("eq21", "delta_a^-alpha Q f == Q _b delta^-alpha f", seq + ", b = a + L - 1", 1e-10, 200,
      q_identity(Family::delta, Kind::sum, Formulation::riemann));
  add("eq22", "delta_a^alpha Q f == Q _b delta^alpha f", seq + ", b = a + L - 1", 1e-10, 200,
      q_identity(Family::delta, Kind::difference, Formulation::riemann));
  add("eq23", "nabla_a^-alpha Q f == Q _b nabla^-alpha f", seq + ", b = a + L - 1", 1e-10, 200,
      q_identity(Family::nabla, Kind::sum, Formulation::riemann));
  add("eq24", "nabla_a^alpha Q f == Q _b nabla^alpha f", seq + ", b = a + L - 1", 1e-10, 200,
      q_identity(Family::nabla, Kind::difference, Formulation::riemann));
  add("gl-qconj", "binomial right operators == Q (binomial left) Q", seq + ", b = a + L - 1", 1e-10,
      200, [](Rng& rng) {
        const Family family = coin(rng, 0.5) ? Family::delta : Family::nabla;
        const Kind kind = coin(rng, 0.5) ? Kind::sum : Kind::difference;
        return q_identity(family, kind, Formulation::binomial)(rng);
      });

  add("qinv", "Q Q f == f and |Qf|_max == |f|_max", seq, 1e-12, 200, [](Rng& rng) {
    const double a = random_anchor(rng);
    const int span = uniform_int(rng, 0, kMaxLength);
    const int L = uniform_int(rng, 1, span + 1);
    const int offset = uniform_int(rng, 0, span + 1 - L);
    const auto q = AnchorPair::make(a, a + span);
    const GridFunction f(a + offset, random_values(rng, static_cast<std::size_t>(L)));
    const auto qf = q_reflect(f, q);
    double err = compare_same_grid(q_reflect(qf, q), f);
    double nf = 0.0;
    double nq = 0.0;
    for (double v : f.values()) nf = std::max(nf, std::abs(v));
    for (double v : qf.values()) nq = std::max(nq, std::abs(v));
    err = std::max(err, relative_error(nf, nq));
    return std::optional<Trial>(Trial{err, {{"a", round_output(a)}, {"b", round_output(a + span)},
                                            {"f", to_json(f)}}});
  });
  add("nabla-delta-q", "-Q nabla f == delta Q f and -Q delta f == nabla Q f", seq + ", L >= 2",
      1e-12, 200, [](Rng& rng) {
        const double a = random_anchor(rng);
        const int L = uniform_int(rng, 2, kMaxLength);
        const auto q = AnchorPair::make(a, a + L - 1);
        const GridFunction f(a, random_values(rng, static_cast<std::size_t>(L)));
        const double e1 = compare_same_grid(negated(q_reflect(nabla(f), q)), delta(q_reflect(f, q)));
        const double e2 = compare_same_grid(negated(q_reflect(delta(f), q)), nabla(q_reflect(f, q)));
        return std::optional<Trial>(Trial{std::max(e1, e2), {{"a", round_output(a)},
                                                             {"f", to_json(f)}}});
      });
  add("binom-diff", "iterated delta^n / nabla^n == single binomial sum",
      "random f uniform in [-1,1], n <= 8, L <= 64", 1e-12, 200, [](Rng& rng) {
        const int n = uniform_int(rng, 1, 8);
        const int L = uniform_int(rng, n + 1, 64);
        const GridFunction f(random_anchor(rng), random_values(rng, static_cast<std::size_t>(L)));
        const DiffOp op = coin(rng, 0.5) ? DiffOp::delta : DiffOp::nabla;
        return std::optional<Trial>(Trial{
            compare_same_grid(iterate_diff(f, op, n), binomial_diff(f, op, n)),
            {{"n", n}, {"op", op == DiffOp::delta ? "delta" : "nabla"}, {"f", to_json(f)}}});
      });

  add("ivp-15", "u = delta_a^-n f solves delta^n u = f, u(a+j-1) = 0", seq + ", n in {1,2,3}",
      1e-11, 200, ivp(Family::delta, Side::left));
  add("ivp-16", "u = _b delta^-n f solves (-1)^n nabla^n u = f, u(b-j+1) = 0",
      seq + ", n in {1,2,3}", 1e-11, 200, ivp(Family::delta, Side::right));
  add("ivp-s1", "y = nabla_a^-n f solves nabla^n y = f, nabla^i y(a) = 0", seq + ", n in {1,2,3}",
      1e-11, 200, ivp(Family::nabla, Side::left));
  add("ivp-s2", "y = _b nabla^-n f solves (-1)^n delta^n y = f, (-1)^i delta^i y(b) = 0",
      seq + ", n in {1,2,3}", 1e-11, 200, ivp(Family::nabla, Side::right));

  add("cauchy-delta-left", "(t-sigma(s))^(n-1)/(n-1)! vanishes for s = t-n+1..t-1",
      "n in 1..8, t uniform in [-5,20]", 1e-12, 200, [](Rng& rng) {
        const int n = uniform_int(rng, 1, 8);
        const double t = uniform(rng, -5.0, 20.0);
        const double fact = std::tgamma(n);
        auto kernel = [&](double s) { return falling_factorial(t - (s + 1.0), n - 1) / fact; };
        double err = relative_error(kernel(t - n), 1.0);
        for (int j = 1; j <= n - 1; ++j) {
          if (kernel(t - j) != 0.0) err = kInf;
        }
        return std::optional<Trial>(Trial{err, scalars({{"n", n}, {"t", t}})});
      });
  add("cauchy-delta-right", "(rho(s)-t)^(n-1)/(n-1)! vanishes for s = t+1..t+n-1",
      "n in 1..8, t uniform in [-5,20]", 1e-12, 200, [](Rng& rng) {
        const int n = uniform_int(rng, 1, 8);
        const double t = uniform(rng, -5.0, 20.0);
        const double fact = std::tgamma(n);
        auto kernel = [&](double s) { return falling_factorial((s - 1.0) - t, n - 1) / fact; };
        double err = relative_error(kernel(t + n), 1.0);
        for (int j = 1; j <= n - 1; ++j) {
          if (kernel(t + j) != 0.0) err = kInf;
        }
        return std::optional<Trial>(Trial{err, scalars({{"n", n}, {"t", t}})});
      });

  add("lem1.1-i", "delta t^(alpha) == alpha t^(alpha-1)",
      "t in (0,12), alpha in (0,4), t+1-alpha > 0", 1e-10, 200, [](Rng& rng) {
        const double t = uniform(rng, 0.0, 12.0);
        const double alpha = uniform(rng, 0.0, 4.0);
        if (t + 1.0 - alpha <= 0.0) return std::optional<Trial>();
        return scalar_trial(guarded([&] {
                              return relative_error(
                                  falling_factorial(t + 1.0, alpha) - falling_factorial(t, alpha),
                                  alpha * falling_factorial(t, alpha - 1.0));
                            }),
                            scalars({{"t", t}, {"alpha", alpha}}));
      });
  add("lem1.1-ii", "(t-mu) t^(mu) == t^(mu+1)", "t in (0,12), mu in (-2,4), t-mu > 0", 1e-10, 200,
      [](Rng& rng) {
        const double t = uniform(rng, 0.0, 12.0);
        const double mu = uniform(rng, -2.0, 4.0);
        if (t - mu <= 0.0) return std::optional<Trial>();
        return scalar_trial(guarded([&] {
                              return relative_error((t - mu) * falling_factorial(t, mu),
                                                    falling_factorial(t, mu + 1.0));
                            }),
                            scalars({{"t", t}, {"mu", mu}}));
      });
  add("lem1.1-iii", "mu^(mu) == Gamma(mu+1)", "mu in (0,20)", 1e-10, 200, [](Rng& rng) {
    const double mu = uniform(rng, 0.0, 20.0);
    return scalar_trial(relative_error(falling_factorial(mu, mu), std::tgamma(mu + 1.0)),
                        scalars({{"mu", mu}}));
  });
  add("lem1.1-iv", "t <= r < alpha implies t^(alpha) <= r^(alpha)",
      "0 < t <= r < alpha < t+1 (all Gamma arguments positive)", 1e-12, 200, [](Rng& rng) {
        const double r = uniform(rng, 0.01, 8.0);
        const double t = uniform(rng, 0.01, r);
        if (r >= t + 1.0) return std::optional<Trial>();
        const double alpha = uniform(rng, r, t + 1.0);
        if (alpha <= r) return std::optional<Trial>();
        return scalar_trial(violation(falling_factorial(t, alpha), falling_factorial(r, alpha)),
                            scalars({{"t", t}, {"r", r}, {"alpha", alpha}}));
      });
  add("lem1.1-v", "0 < alpha < 1 implies t^(alpha nu) >= (t^(nu))^alpha",
      "alpha in (0,1), t in (0,10), 0 < nu < t+1", 1e-12, 200, [](Rng& rng) {
        const double alpha = uniform(rng, 0.0, 1.0);
        const double t = uniform(rng, 0.01, 10.0);
        const double nu = uniform(rng, 0.01, t + 1.0);
        if (alpha <= 0.0 || nu >= t + 1.0) return std::optional<Trial>();
        const double base = falling_factorial(t, nu);
        if (!(base > 0.0)) return std::optional<Trial>();
        return scalar_trial(violation(std::pow(base, alpha), falling_factorial(t, alpha * nu)),
                            scalars({{"t", t}, {"nu", nu}, {"alpha", alpha}}));
      });
  add("lem1.1-vi", "t^(alpha+beta) == (t-beta)^(alpha) t^(beta)",
      "t in (0,12), alpha, beta in (0,3), all Gamma arguments positive", 1e-10, 200, [](Rng& rng) {
        const double t = uniform(rng, 0.0, 12.0);
        const double alpha = uniform(rng, 0.0, 3.0);
        const double beta = uniform(rng, 0.0, 3.0);
        if (t + 1.0 - alpha - beta <= 0.0) return std::optional<Trial>();
        return scalar_trial(guarded([&] {
                              return relative_error(
                                  falling_factorial(t, alpha + beta),
                                  falling_factorial(t - beta, alpha) * falling_factorial(t, beta));
                            }),
                            scalars({{"t", t}, {"alpha", alpha}, {"beta", beta}}));
      });

  add("ou1", "nabla_s (s-t)^(alpha-1) == (alpha-1)(rho(s)-t)^(alpha-2)",
      "t uniform in [-4,4], s - t integer in [-3,20], alpha in (0,4)", 1e-10, 200, [](Rng& rng) {
        const double t = random_anchor(rng);
        const double s = t + uniform_int(rng, -3, 20);
        const double alpha = fractional_alpha(rng, 0.0, 4.0);
        return scalar_trial(guarded([&] {
                              return relative_error(falling_factorial(s - t, alpha - 1.0) -
                                                        falling_factorial(s - 1.0 - t, alpha - 1.0),
                                                    (alpha - 1.0) *
                                                        falling_factorial(s - 1.0 - t, alpha - 2.0));
                            }),
                            scalars({{"s", s}, {"t", t}, {"alpha", alpha}}));
      });
  add("ou2", "nabla_t (rho(s)-t)^(alpha-1) == -(alpha-1)(rho(s)-t)^(alpha-2)",
      "t uniform in [-4,4], s - t integer in [-3,20], alpha in (0,4)", 1e-10, 200, [](Rng& rng) {
        const double t = random_anchor(rng);
        const double s = t + uniform_int(rng, -3, 20);
        const double alpha = fractional_alpha(rng, 0.0, 4.0);
        return scalar_trial(guarded([&] {
                              return relative_error(
                                  falling_factorial((s - 1.0) - t, alpha - 1.0) -
                                      falling_factorial((s - 1.0) - (t - 1.0), alpha - 1.0),
                                  -(alpha - 1.0) * falling_factorial((s - 1.0) - t, alpha - 2.0));
                            }),
                            scalars({{"s", s}, {"t", t}, {"alpha", alpha}}));
      });
  add("oper", "nabla t^{rising alpha} == alpha t^{rising alpha-1}",
      "t in (0.5,15) or integer in 1..10, alpha in (0,4)", 1e-10, 200, [](Rng& rng) {
        const double t = coin(rng, 0.25) ? uniform_int(rng, 1, 10) : uniform(rng, 0.5, 15.0);
        const double alpha = uniform(rng, 0.0, 4.0);
        return scalar_trial(guarded([&] {
                              return relative_error(
                                  rising_factorial(t, alpha) - rising_factorial(t - 1.0, alpha),
                                  alpha * rising_factorial(t, alpha - 1.0));
                            }),
                            scalars({{"t", t}, {"alpha", alpha}}));
      });
  add("oper2", "t^{rising alpha} == (t+alpha-1)^(alpha)", "t in (0,15), alpha in (-0.9,4)", 1e-10,
      200, [](Rng& rng) {
        const double t = uniform(rng, 0.0, 15.0);
        const double alpha = uniform(rng, -0.9, 4.0);
        return scalar_trial(guarded([&] {
                              return relative_error(rising_factorial(t, alpha),
                                                    falling_factorial(t + alpha - 1.0, alpha));
                            }),
                            scalars({{"t", t}, {"alpha", alpha}}));
      });
  add("oper3", "delta_t (s-rho(t))^{rising alpha} == -alpha (s-rho(t))^{rising alpha-1}",
      "t uniform in [-4,4], s - t + 1 integer in [1,20], alpha in (0,4)", 1e-10, 200,
      [](Rng& rng) {
        const double t = random_anchor(rng);
        const double s = t + uniform_int(rng, 0, 19);
        const double alpha = uniform(rng, 0.0, 4.0);
        return scalar_trial(guarded([&] {
                              return relative_error(rising_factorial(s - t, alpha) -
                                                        rising_factorial(s - (t - 1.0), alpha),
                                                    -alpha * rising_factorial(s - (t - 1.0), alpha - 1.0));
                            }),
                            scalars({{"s", s}, {"t", t}, {"alpha", alpha}}));
      });

  add("falling-product", "Gamma-ratio t^(n) == prod_{j<n} (t-j)",
      "n in 0..12, t integer in [-10,20] or real in (-10,20)", 1e-12, 200, [](Rng& rng) {
        const int n = uniform_int(rng, 0, 12);
        const double t = coin(rng, 0.5) ? uniform_int(rng, -10, 20) : uniform(rng, -10.0, 20.0);
        double prod = 1.0;
        for (int j = 0; j < n; ++j) prod *= t - j;
        return scalar_trial(guarded([&] { return relative_error(falling_factorial(t, n), prod); }),
                            scalars({{"t", t}, {"n", n}}));
      });
  add("rising-product", "Gamma-ratio t^{rising m} == prod_{k<m} (t+k)",
      "m in 1..12, t integer in [0,20] or real in (0,20)", 1e-12, 200, [](Rng& rng) {
        const int m = uniform_int(rng, 1, 12);
        const double t = coin(rng, 0.5) ? uniform_int(rng, 0, 20) : uniform(rng, 0.0, 20.0);
        double prod = 1.0;
        for (int k = 0; k < m; ++k) prod *= t + k;
        return scalar_trial(guarded([&] { return relative_error(rising_factorial(t, m), prod); }),
                            scalars({{"t", t}, {"m", m}}));
      });
  add("pole", "Gamma(4)/Gamma(-1) == 0, Gamma(-1)/Gamma(-4) == -24, numerator-only pole raises",
      "fixed inputs", 1e-12, 1, [](Rng&) {
        double err = std::max(relative_error(gamma_ratio(4.0, -1.0), 0.0),
                              relative_error(gamma_ratio(-1.0, -4.0), -24.0));
        err = std::max(err, relative_error(falling_factorial(-2.0, 3.0), -24.0));
        err = std::max(err, relative_error(rising_factorial(0.0, 0.7), 0.0));
        try {
          gamma_ratio(-3.0, 2.5);
          err = kInf;
        } catch (const Error& e) {
          if (e.kind() != ErrorKind::kernel_singularity) err = kInf;
        }
        return std::optional<Trial>(Trial{err, json::object()});
      });
  add("gl-weights", "GL weight recurrence == direct binomial product",
      "alpha in (0,5), K in 0..64, both modes", 1e-13, 200, [](Rng& rng) {
        const double alpha = uniform(rng, 0.0, 5.0);
        const auto K = static_cast<std::size_t>(uniform_int(rng, 0, 64));
        const WeightMode mode = coin(rng, 0.5) ? WeightMode::difference : WeightMode::sum;
        const auto w = gl_weights(alpha, mode, K);
        double err = 0.0;
        for (std::size_t k = 0; k <= K; ++k) {
          // C(top, k) = prod_{j<k} (top - j) / k!
          const double top = mode == WeightMode::difference ? alpha : alpha + static_cast<double>(k) - 1.0;
          double num = 1.0;
          double den = 1.0;
          for (std::size_t j = 0; j < k; ++j) {
            num *= top - static_cast<double>(j);
            den *= static_cast<double>(j + 1);
          }
          double direct = num / den;
          if (mode == WeightMode::difference && k % 2 == 1) direct = -direct;
          err = std::max(err, relative_error(w.w[k], direct));
        }
        return std::optional<Trial>(
            Trial{err, {{"alpha", round_output(alpha)}, {"K", K},
                        {"mode", mode == WeightMode::sum ? "sum" : "difference"}}});
      });
  add("kernel-forms", "(s-sigma(t))^(a-1) == (rho(s)-t)^(a-1) and (s-rho(t))^{a-1} == (sigma(s)-t)^{a-1}",
      "t uniform in [-4,4], alpha in (0,3), s on the right-sum range", 1e-12, 200, [](Rng& rng) {
        const double t = random_anchor(rng);
        const double alpha = fractional_alpha(rng, 0.0, 3.0);
        const int j = uniform_int(rng, 0, 20);
        const double sd = t + alpha + j;  // delta-right summation point
        const double sn = t + j;          // nabla-right summation point
        const double e1 = relative_error(falling_factorial(sd - (t + 1.0), alpha - 1.0),
                                         falling_factorial((sd - 1.0) - t, alpha - 1.0));
        const double e2 = relative_error(rising_factorial(sn - (t - 1.0), alpha - 1.0),
                                         rising_factorial((sn + 1.0) - t, alpha - 1.0));
        return std::optional<Trial>(Trial{std::max(e1, e2),
                                          scalars({{"t", t}, {"alpha", alpha}, {"j", j}})});
      });

  add("alt-25", "delta-left difference == Gamma(-alpha) single-sum form",
      seq + ", alpha in (0,3)\\{1,2}", 1e-9, 200, alt_form(Family::delta, Side::left));
  add("alt-26", "nabla-left difference == Gamma(-alpha) single-sum form",
      seq + ", alpha in (0,3)\\{1,2}", 1e-9, 200, alt_form(Family::nabla, Side::left));
  add("alt-27", "nabla-right difference == Gamma(-alpha) single-sum form",
      seq + ", alpha in (0,3)\\{1,2}", 1e-9, 200, alt_form(Family::nabla, Side::right));
  add("alt-28", "delta-right difference == Gamma(-alpha) single-sum form",
      seq + ", alpha in (0,3)\\{1,2}", 1e-9, 200, alt_form(Family::delta, Side::right));

  add("intorder", "integer orders reproduce iterated differences and unit sums",
      seq + ", alpha in {1,2,3}, all eight operators, both formulations", 1e-12, 200,
      integer_order_trial);
  add("domains", "output grids of all sixteen operators", seq + ", alpha in (0,3]", 1e-12, 200,
      domains_trial);
  add("fastpath", "gl_apply_fast == gl_apply", "L = 4096, alpha in {0.3, 1.7}, all eight operators",
      1e-9, 50, fastpath_trial);
  return r;
}

const std::vector<Entry>& entries() {
  static const std::vector<Entry> e = build_registry();
  return e;
}

const Entry& find_entry(const std::string& id) {
  for (const auto& e : entries()) {
    if (e.check.id == id) return e;
  }
  throw Error(ErrorKind::unknown_id, "unknown id '" + id + "'");
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace

double relative_error(double lhs, double rhs) noexcept {
  if (!std::isfinite(lhs) || !std::isfinite(rhs)) return kInf;
  return std::abs(lhs - rhs) / std::max({std::abs(lhs), std::abs(rhs), 1.0});
}

const std::vector<IdentityCheck>& registry() {
  static const std::vector<IdentityCheck> checks = [] {
    std::vector<IdentityCheck> out;
    for (const auto& e : entries()) out.push_back(e.check);
    return out;
  }();
  return checks;
}

const IdentityCheck& find_check(const std::string& id) { return find_entry(id).check; }

VerificationReport run_check(const IdentityCheck& check, std::uint64_t seed) {
  const Entry& entry = find_entry(check.id);
  const std::uint64_t h = fnv1a(check.id);
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(h), static_cast<std::uint32_t>(h >> 32)};
  Rng rng(seq);

  VerificationReport report;
  report.id = check.id;
  report.tolerance = check.tolerance;
  report.worst_input = nlohmann::json::object();
  const long max_attempts = static_cast<long>(check.trials) * kDiscardFactor;
  bool have_worst = false;
  for (long attempt = 0; attempt < max_attempts && report.trials < check.trials; ++attempt) {
    auto trial = entry.run(rng);
    if (!trial) continue;
    ++report.trials;
    const double err = std::isnan(trial->error) ? kInf : trial->error;
    if (!have_worst || err > report.max_rel_error) {
      report.max_rel_error = err;
      report.worst_input = std::move(trial->input);
      have_worst = true;
    }
  }
  const bool ok = report.trials >= 1 && report.max_rel_error <= check.tolerance;
  report.verdict = ok ? Verdict::pass : Verdict::fail;
  return report;
}

VerificationReport run_check(const std::string& id, std::uint64_t seed) {
  return run_check(find_check(id), seed);
}

std::vector<VerificationReport> run_suite(const std::vector<std::string>& ids, std::uint64_t seed) {
  std::vector<VerificationReport> out;
  if (ids.empty()) {
    for (const auto& c : registry()) out.push_back(run_check(c, seed));
    return out;
  }
  // Resolve every id first so an unknown id fails before any work.
  std::vector<const IdentityCheck*> checks;
  for (const auto& id : ids) checks.push_back(&find_check(id));
  for (const auto* c : checks) out.push_back(run_check(*c, seed));
  return out;
}

bool all_passed(const std::vector<VerificationReport>& reports) noexcept {
  for (const auto& r : reports) {
    if (r.verdict != Verdict::pass) return false;
  }
  return true;
}

nlohmann::json to_json(const VerificationReport& report) {
  nlohmann::json j;
  j["id"] = report.id;
  j["trials"] = report.trials;
  if (std::isfinite(report.max_rel_error)) {
    j["max_rel_error"] = round_output(report.max_rel_error);
  } else {
    j["max_rel_error"] = "inf";
  }
  j["tolerance"] = report.tolerance;
  j["worst_input"] = report.worst_input;
  j["verdict"] = report.verdict == Verdict::pass ? "pass" : "fail";
  return j;
}

std::string to_jsonl(const VerificationReport& report) { return to_json(report).dump(); }

}  // namespace discfrac
