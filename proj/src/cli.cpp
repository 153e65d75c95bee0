#include "discfrac/cli.hpp"

#include <chrono>
#include <fstream>
#include <ostream>
#include <random>

#include "discfrac/error.hpp"
#include "discfrac/glbinomial.hpp"
#include "discfrac/io.hpp"
#include "discfrac/operator.hpp"
#include "discfrac/riemann.hpp"
#include "discfrac/specfun.hpp"
#include "discfrac/verify.hpp"

namespace discfrac::cli {

namespace {

int status_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::parse_error:
    case ErrorKind::unknown_id:
      return kUsage;
    default:
      return kDomain;
  }
}

GridFormat output_format(const RunConfig& config) {
  if (config.format == "json") return GridFormat::json;
  if (config.format == "csv") return GridFormat::csv;
  if (!config.format.empty()) {
    throw Error(ErrorKind::parse_error, "unknown format '" + config.format + "'");
  }
  const auto& p = config.output;
  if (p.size() >= 5 && p.compare(p.size() - 5, 5, ".json") == 0) return GridFormat::json;
  return GridFormat::csv;
}

// Writes to the --output file, or to `fallback` when none was given.
template <class Writer>
void emit(const RunConfig& config, std::ostream& fallback, Writer&& write) {
  if (config.output.empty()) {
    write(fallback);
    return;
  }
  std::ofstream file(config.output);
  if (!file) throw Error(ErrorKind::parse_error, "cannot write '" + config.output + "'");
  write(file);
}

OperatorSpec spec_from(const RunConfig& config) {
  OperatorSpec spec;
  spec.family = parse_family(config.family);
  spec.side = parse_side(config.side);
  spec.kind = parse_kind(config.kind);
  spec.formulation = parse_formulation(config.formulation);
  if (!config.alpha) throw Error(ErrorKind::parse_error, "--alpha is required");
  spec.order = Order(*config.alpha);
  return spec;
}

GridFunction apply_spec(const OperatorSpec& spec, const GridFunction& f, bool direct) {
  if (spec.formulation == Formulation::riemann) return riemann_apply(spec, f);
  return direct ? gl_apply(spec, f) : gl_apply_fast(spec, f);
}

template <class Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return status_for(e);
  }
}

}  // namespace

int cmd_apply(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (config.input.empty()) throw Error(ErrorKind::parse_error, "--input is required");
    OperatorSpec spec = spec_from(config);
    const GridFormat format = output_format(config);
    const ParsedGrid parsed = read_grid_file(config.input);
    const double L = static_cast<double>(parsed.values.size());

    GridFunction f = [&] {
      if (spec.side == Side::left) {
        if (!config.a && !parsed.origin) {
          throw Error(ErrorKind::parse_error, "left operators need --a or an origin in the input");
        }
        spec.anchor = config.a ? *config.a : *parsed.origin;
        return parsed.resolve(spec.anchor);
      }
      if (!config.b && !parsed.origin) {
        throw Error(ErrorKind::parse_error, "right operators need --b or an origin in the input");
      }
      spec.anchor = config.b ? *config.b : *parsed.origin + (L - 1.0);
      return parsed.resolve(spec.anchor - (L - 1.0));
    }();

    const GridFunction result = apply_spec(spec, f, config.direct);
    out << "origin=" << format_real(result.origin()) << " length=" << result.size() << '\n';
    emit(config, out, [&](std::ostream& os) { write_grid(os, result, format); });
    return static_cast<int>(kOk);
  });
}

int cmd_weights(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (!config.alpha) throw Error(ErrorKind::parse_error, "--alpha is required");
    const Order order(*config.alpha);
    WeightMode mode = WeightMode::difference;
    if (config.mode == "sum") {
      mode = WeightMode::sum;
    } else if (config.mode != "difference") {
      throw Error(ErrorKind::parse_error, "unknown mode '" + config.mode + "'");
    }
    const auto w = gl_weights(order.alpha(), mode, config.K);
    emit(config, out, [&](std::ostream& os) {
      os << "k,w\n";
      for (std::size_t k = 0; k < w.w.size(); ++k) os << k << ',' << format_real(w.w[k]) << '\n';
    });
    return static_cast<int>(kOk);
  });
}

int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto reports = run_suite(config.ids, config.seed);
    emit(config, out, [&](std::ostream& os) {
      for (const auto& r : reports) os << to_jsonl(r) << '\n';
    });
    int failed = 0;
    for (const auto& r : reports) {
      if (r.verdict == Verdict::fail) {
        ++failed;
        err << "FAIL " << r.id << " max_rel_error=" << format_real(r.max_rel_error)
            << " tolerance=" << format_real(r.tolerance) << '\n';
      }
    }
    return failed == 0 ? static_cast<int>(kOk) : static_cast<int>(kCheckFailed);
  });
}

int cmd_bench(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    RunConfig defaults = config;
    if (!defaults.alpha) defaults.alpha = 0.5;
    defaults.formulation = "binomial";
    OperatorSpec spec = spec_from(defaults);
    spec.anchor = config.side == "right" ? config.b.value_or(0.0) : config.a.value_or(0.0);

    std::vector<std::size_t> sizes = config.sizes;
    if (sizes.empty()) {
      for (std::size_t p = 10; p <= 14; ++p) sizes.push_back(std::size_t{1} << p);
    }

    std::mt19937_64 rng(config.seed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    bool agree = true;
    emit(config, out, [&](std::ostream& os) {
      os << "size\tdirect_ns\tfast_ns\tmax_rel_err\n";
      for (std::size_t L : sizes) {
        std::vector<double> v(L);
        for (auto& x : v) x = dist(rng);
        const double origin = spec.side == Side::left ? spec.anchor
                                                      : spec.anchor - static_cast<double>(L - 1);
        const GridFunction f(origin, std::move(v));

        using clock = std::chrono::steady_clock;
        const auto t0 = clock::now();
        const GridFunction direct = gl_apply(spec, f);
        const auto t1 = clock::now();
        const GridFunction fast = gl_apply_fast(spec, f);
        const auto t2 = clock::now();

        double worst = 0.0;
        for (std::size_t j = 0; j < direct.size(); ++j) {
          worst = std::max(worst, relative_error(direct[j], fast[j]));
        }
        if (!(worst <= 1e-9)) agree = false;
        const auto ns = [](auto d) {
          return std::chrono::duration_cast<std::chrono::nanoseconds>(d).count();
        };
        os << L << '\t' << ns(t1 - t0) << '\t' << ns(t2 - t1) << '\t' << format_real(worst) << '\n';
      }
    });
    if (!agree) {
      err << "error: fast and direct paths disagree beyond 1e-9\n";
      return static_cast<int>(kCheckFailed);
    }
    return static_cast<int>(kOk);
  });
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (config.subcommand == "apply") return cmd_apply(config, out, err);
  if (config.subcommand == "weights") return cmd_weights(config, out, err);
  if (config.subcommand == "verify") return cmd_verify(config, out, err);
  if (config.subcommand == "bench") return cmd_bench(config, out, err);
  err << "error: unknown subcommand '" << config.subcommand << "'\n";
  return kUsage;
}

}  // namespace discfrac::cli
