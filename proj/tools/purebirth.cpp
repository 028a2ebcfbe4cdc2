// Command-line front end: pmf/cdf/ccdf/moments/simulate/eigen/matrices/verify
// over the pure birth process family, with exact, float and log-space
// backends and table/CSV/JSON output.
//
// Exit codes: 0 success, 2 configuration error, 3 verification mismatch.
#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "purebirth/occupancy.hpp"
#include "purebirth/oracle.hpp"
#include "purebirth/randomized.hpp"
#include "purebirth/sim.hpp"
#include "purebirth/variants.hpp"

using namespace purebirth;
using ordered_json = nlohmann::ordered_json;

namespace {

constexpr const char* kVersion = "1.0.0";
constexpr int kExitConfig = 2;
constexpr int kExitVerify = 3;

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct VerifyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Model { Pbp, Occupancy, Randomized, Complementary, Binomial };

Model parse_model(const std::string& s) {
    if (s == "pbp") return Model::Pbp;
    if (s == "occupancy") return Model::Occupancy;
    if (s == "randomized") return Model::Randomized;
    if (s == "complementary") return Model::Complementary;
    if (s == "binomial") return Model::Binomial;
    throw ConfigError("unknown model '" + s + "'");
}

const char* model_name(Model m) {
    switch (m) {
        case Model::Pbp: return "pbp";
        case Model::Occupancy: return "occupancy";
        case Model::Randomized: return "randomized";
        case Model::Complementary: return "complementary";
        case Model::Binomial: return "binomial";
    }
    return "?";
}

// A probability literal: "a/b" stays exact, a decimal marks the value as
// float-only so exact mode can reject it.
struct ProbLiteral {
    Rational value;
    bool was_decimal = false;
};

ProbLiteral parse_probability(const std::string& text) {
    ProbLiteral lit;
    if (text.find('/') != std::string::npos) {
        lit.value = Rational::from_string(text);
        return lit;
    }
    if (text.find('.') == std::string::npos && text.find('e') == std::string::npos &&
        text.find('E') == std::string::npos) {
        lit.value = Rational::from_string(text);  // plain integer
        return lit;
    }
    std::size_t used = 0;
    double d = std::stod(text, &used);
    if (used != text.size()) throw ConfigError("cannot parse probability '" + text + "'");
    mpq_class q;
    mpq_set_d(q.get_mpq_t(), d);  // the exact binary rational behind the double
    lit.value = Rational(q);
    lit.was_decimal = true;
    return lit;
}

struct Range {
    long lo = 0;
    long hi = 0;
};

Range parse_range(const std::string& text) {
    auto pos = text.find("..");
    Range r;
    try {
        if (pos == std::string::npos) {
            r.lo = r.hi = std::stol(text);
        } else {
            r.lo = std::stol(text.substr(0, pos));
            r.hi = std::stol(text.substr(pos + 2));
        }
    } catch (const std::exception&) {
        throw ConfigError("cannot parse range '" + text + "'");
    }
    if (r.lo > r.hi) throw ConfigError("empty range '" + text + "'");
    return r;
}

struct RunConfig {
    Model model = Model::Occupancy;
    int n = 0;
    std::optional<Range> t_range;
    std::optional<Range> k_range;
    int r = -1;  // initial state; defaults per model
    std::optional<ProbLiteral> retention;
    std::vector<ProbLiteral> pvec;
    Backend backend = Backend::Exact;
    bool backend_given = false;
    std::string format = "table";
    bool verify = false;
    std::uint64_t seed = 0;
    std::uint64_t n_samples = 10000;
    std::optional<int> hitting;
    bool all_matrices = false;
};

struct Row {
    std::optional<long> k;
    std::optional<long> t;
    std::string quantity;
    std::string value;
};

// Renders a LogFloat faithfully even when exp(log) underflows float64.
std::string logfloat_to_string(const LogFloat& v) {
    if (v.is_zero()) return "0";
    double value = v.value();
    if (value > 0.0 && std::isfinite(value)) return float_to_string(value);
    double log10v = v.log() / std::log(10.0);
    double expo = std::floor(log10v);
    double mantissa = std::pow(10.0, log10v - expo);
    return float_to_string(mantissa) + "e" + std::to_string(static_cast<long long>(expo));
}

class Emitter {
public:
    Emitter(const RunConfig& cfg, std::string command) : cfg_(cfg), command_(std::move(command)) {}

    void add(std::optional<long> k, std::optional<long> t, std::string quantity, std::string value) {
        rows_.push_back(Row{k, t, std::move(quantity), std::move(value)});
    }

    void render(std::ostream& os) const {
        if (cfg_.format == "csv") {
            render_csv(os);
        } else if (cfg_.format == "json") {
            render_json(os);
        } else {
            render_table(os);
        }
    }

private:
    std::string p_string() const {
        return cfg_.retention ? cfg_.retention->value.str() : std::string();
    }

    void render_csv(std::ostream& os) const {
        os << "model,n,p,r,k,t,quantity,value,backend\n";
        for (const Row& row : rows_) {
            os << model_name(cfg_.model) << ',' << cfg_.n << ',' << p_string() << ',' << cfg_.r << ',';
            if (row.k) os << *row.k;
            os << ',';
            if (row.t) os << *row.t;
            os << ',' << row.quantity << ',' << row.value << ',' << backend_name(cfg_.backend) << '\n';
        }
    }

    void render_json(std::ostream& os) const {
        ordered_json doc;
        doc["meta"] = ordered_json{{"version", kVersion},
                                   {"command", command_},
                                   {"model", model_name(cfg_.model)},
                                   {"n", cfg_.n},
                                   {"p", p_string()},
                                   {"r", cfg_.r},
                                   {"backend", backend_name(cfg_.backend)},
                                   {"seed", cfg_.seed},
                                   {"N", cfg_.n_samples},
                                   {"verify", cfg_.verify}};
        doc["rows"] = ordered_json::array();
        for (const Row& row : rows_) {
            ordered_json jr;
            jr["model"] = model_name(cfg_.model);
            jr["n"] = cfg_.n;
            jr["p"] = p_string();
            jr["r"] = cfg_.r;
            if (row.k) jr["k"] = *row.k; else jr["k"] = nullptr;
            if (row.t) jr["t"] = *row.t; else jr["t"] = nullptr;
            jr["quantity"] = row.quantity;
            jr["value"] = row.value;
            jr["backend"] = backend_name(cfg_.backend);
            doc["rows"].push_back(std::move(jr));
        }
        os << doc.dump(2) << '\n';
    }

    void render_table(std::ostream& os) const {
        for (const Row& row : rows_) {
            if (row.k) os << "k=" << *row.k << '\t';
            if (row.t) os << "t=" << *row.t << '\t';
            os << row.quantity << '\t' << row.value << '\n';
        }
    }

    const RunConfig& cfg_;
    std::string command_;
    std::vector<Row> rows_;
};

// --- model plumbing --------------------------------------------------------

PureBirthProcess<Rational> exact_process(const RunConfig& cfg) {
    switch (cfg.model) {
        case Model::Occupancy:
            return occupancy::occupancy_process<Rational>(cfg.n);
        case Model::Randomized: {
            if (!cfg.retention) throw ConfigError("model randomized requires --p");
            return randomized::randomized_process<Rational>(cfg.n, cfg.retention->value);
        }
        case Model::Complementary:
            return variants::comp_process<Rational>(cfg.n);
        case Model::Binomial:
            return variants::binomial_chain<Rational>(cfg.n);
        case Model::Pbp: {
            if (cfg.pvec.empty()) throw ConfigError("model pbp requires --pvec or --pvec-file");
            std::vector<Rational> p;
            p.reserve(cfg.pvec.size());
            for (const ProbLiteral& lit : cfg.pvec) p.push_back(lit.value);
            return make_process<Rational>(std::move(p));
        }
    }
    throw ConfigError("unreachable model");
}

// State offset of the model's own numbering: the complementary chain is
// 1-based, everything else starts at 0.
int state_base(Model m) { return m == Model::Complementary ? 1 : 0; }

int default_initial_state(Model m) { return state_base(m); }

long default_time(const RunConfig& cfg) {
    if (cfg.model == Model::Binomial) return cfg.n;
    throw ConfigError("--t is required for this command");
}

enum class Quantity { Pmf, Cdf, Ccdf };

const char* quantity_name(Quantity q) {
    switch (q) {
        case Quantity::Pmf: return "pmf";
        case Quantity::Cdf: return "cdf";
        case Quantity::Ccdf: return "ccdf";
    }
    return "?";
}

// Exact value of one cell through the formula path used by the CLI.
Rational cell_exact(const RunConfig& cfg, Quantity q, const PureBirthProcess<Rational>& proc, int r0, int k, long t) {
    const int base = state_base(cfg.model);
    const int rk = k - base;        // process-internal state index
    const int rr = r0 - base;       // process-internal initial state
    switch (cfg.model) {
        case Model::Occupancy:
            switch (q) {
                case Quantity::Pmf: return occupancy::pmf_conditioned_exact(cfg.n, rr, rk, t);
                case Quantity::Cdf: return occupancy::cdf_conditioned_exact(cfg.n, rr, rk, t);
                case Quantity::Ccdf: return Rational(1) - occupancy::cdf_conditioned_exact(cfg.n, rr, rk, t);
            }
            break;
        case Model::Randomized:
            switch (q) {
                case Quantity::Pmf: return randomized::pmf_conditioned<Rational>(cfg.n, cfg.retention->value, rr, rk, t);
                case Quantity::Cdf: {
                    if (rr == 0) return randomized::cdf<Rational>(cfg.n, cfg.retention->value, rk, t);
                    Rational acc(0);
                    for (int j = 0; j <= rk; ++j) acc += randomized::pmf_conditioned<Rational>(cfg.n, cfg.retention->value, rr, j, t);
                    return acc;
                }
                case Quantity::Ccdf: return Rational(1) - cell_exact(cfg, Quantity::Cdf, proc, r0, k, t);
            }
            break;
        case Model::Complementary:
            switch (q) {
                case Quantity::Pmf: return variants::comp_pmf_conditioned<Rational>(cfg.n, r0, k, t);
                case Quantity::Cdf: {
                    Rational acc(0);
                    for (int j = 1; j <= k; ++j) acc += variants::comp_pmf_conditioned<Rational>(cfg.n, r0, j, t);
                    return acc;
                }
                case Quantity::Ccdf: return Rational(1) - cell_exact(cfg, Quantity::Cdf, proc, r0, k, t);
            }
            break;
        case Model::Pbp:
        case Model::Binomial: {
            if (rr != 0) throw ConfigError("--r is only supported for occupancy, randomized and complementary models");
            switch (q) {
                case Quantity::Pmf: return pmf_general(proc, rk, t);
                case Quantity::Ccdf: return ccdf_general(proc, rk, t);
                case Quantity::Cdf: return Rational(1) - ccdf_general(proc, rk, t);
            }
            break;
        }
    }
    throw ConfigError("unreachable quantity");
}

// Oracle value for --verify: row r0 of the exact dense matrix power.
Rational cell_oracle(Quantity q, const Matrix<Rational>& power, int rr, int rk) {
    switch (q) {
        case Quantity::Pmf: return power.at(rr, rk);
        case Quantity::Cdf: {
            Rational acc(0);
            for (int j = 0; j <= rk; ++j) acc += power.at(rr, j);
            return acc;
        }
        case Quantity::Ccdf: {
            Rational acc(0);
            for (int j = rk + 1; j < power.cols(); ++j) acc += power.at(rr, j);
            return acc;
        }
    }
    throw ConfigError("unreachable quantity");
}

void run_distribution(const RunConfig& cfg, Quantity q, Emitter& out) {
    auto proc = exact_process(cfg);
    const int base = state_base(cfg.model);
    const int n_states = proc.n();
    Range tr = cfg.t_range.value_or(Range{default_time(cfg), default_time(cfg)});
    Range kr = cfg.k_range.value_or(Range{base, base + n_states});
    if (kr.lo < base || kr.hi > base + n_states) throw ConfigError("--k outside the state space");
    if (tr.lo < 0) throw ConfigError("--t must be nonnegative");
    const int r0 = (cfg.r >= 0) ? cfg.r : default_initial_state(cfg.model);
    if (r0 < base || r0 > base + n_states) throw ConfigError("--r outside the state space");

    auto log_proc = (cfg.backend == Backend::Log) ? std::optional(convert_process<LogFloat>(proc)) : std::nullopt;
    auto float_proc = (cfg.backend == Backend::Float) ? std::optional(convert_process<double>(proc)) : std::nullopt;

    for (long t = tr.lo; t <= tr.hi; ++t) {
        std::optional<Matrix<Rational>> power;
        if (cfg.verify) {
            power = oracle::matrix_power_exact(oracle::to_dense(proc), static_cast<unsigned long>(t));
        }
        for (long k = kr.lo; k <= kr.hi; ++k) {
            Rational exact = cell_exact(cfg, q, proc, r0, static_cast<int>(k), t);
            std::string rendered;
            double approx = 0.0;
            switch (cfg.backend) {
                case Backend::Exact:
                    rendered = exact.str();
                    approx = exact.to_double();
                    break;
                case Backend::Float: {
                    // The float path recomputes through float arithmetic
                    // rather than rounding the exact value.
                    double v = 0.0;
                    const int rk = static_cast<int>(k) - base;
                    const int rr = r0 - base;
                    switch (cfg.model) {
                        case Model::Occupancy:
                            v = (q == Quantity::Pmf)   ? occupancy::pmf_conditioned_float(cfg.n, rr, rk, t)
                                : (q == Quantity::Cdf) ? occupancy::cdf_conditioned_float(cfg.n, rr, rk, t)
                                                       : 1.0 - occupancy::cdf_conditioned_float(cfg.n, rr, rk, t);
                            break;
                        case Model::Randomized: {
                            double pf = cfg.retention->value.to_double();
                            if (q == Quantity::Pmf) {
                                v = randomized::pmf_conditioned<double>(cfg.n, pf, rr, rk, t);
                            } else {
                                double acc = (rr == 0) ? randomized::cdf<double>(cfg.n, pf, rk, t) : 0.0;
                                if (rr != 0) {
                                    for (int j = 0; j <= rk; ++j) acc += randomized::pmf_conditioned<double>(cfg.n, pf, rr, j, t);
                                }
                                v = (q == Quantity::Cdf) ? acc : 1.0 - acc;
                            }
                            break;
                        }
                        default: {
                            double g = (q == Quantity::Pmf) ? pmf_general(*float_proc, rk, t)
                                                            : ccdf_general(*float_proc, rk, t);
                            if (cfg.model == Model::Complementary && q != Quantity::Pmf) {
                                g = ccdf_general(*float_proc, rk, t);
                            }
                            v = (q == Quantity::Cdf) ? 1.0 - g : g;
                            break;
                        }
                    }
                    rendered = float_to_string(v);
                    approx = v;
                    break;
                }
                case Backend::Log: {
                    const int rk = static_cast<int>(k) - base;
                    LogFloat v;
                    if (q == Quantity::Pmf) {
                        v = pmf_general(*log_proc, rk, t);
                    } else if (q == Quantity::Ccdf) {
                        v = ccdf_general(*log_proc, rk, t);
                    } else {
                        throw ConfigError("cdf needs subtraction; use the exact or float backend");
                    }
                    if (cfg.r >= 0 && cfg.r != default_initial_state(cfg.model))
                        throw ConfigError("--r is not supported with the logfloat backend");
                    rendered = logfloat_to_string(v);
                    approx = v.value();
                    break;
                }
            }
            out.add(k, t, quantity_name(q), rendered);

            if (cfg.verify) {
                Rational want = cell_oracle(q, *power, r0 - base, static_cast<int>(k) - base);
                if (cfg.backend == Backend::Exact) {
                    if (exact != want) {
                        throw VerifyError("verify mismatch at k=" + std::to_string(k) + " t=" + std::to_string(t) +
                                          ": formula " + exact.str() + " vs oracle " + want.str());
                    }
                } else {
                    double w = want.to_double();
                    if (std::abs(approx - w) > 1e-9 * std::max(1.0, std::abs(w))) {
                        throw VerifyError("verify mismatch at k=" + std::to_string(k) + " t=" + std::to_string(t) +
                                          ": " + float_to_string(approx) + " vs oracle " + float_to_string(w));
                    }
                }
            }
        }
    }
}

void run_moments(const RunConfig& cfg, Emitter& out) {
    auto proc = exact_process(cfg);
    if (cfg.hitting) {
        const int base = state_base(cfg.model);
        int k = *cfg.hitting;
        if (k - base < 1 || k - base > proc.n()) throw ConfigError("--hitting outside the state space");
        auto m = hitting_time_moments(proc, k - base);
        if (cfg.backend == Backend::Float) {
            out.add(k, std::nullopt, "hitting_mean", float_to_string(m.mean.to_double()));
            out.add(k, std::nullopt, "hitting_variance", float_to_string(m.variance.to_double()));
        } else {
            out.add(k, std::nullopt, "hitting_mean", m.mean.str());
            out.add(k, std::nullopt, "hitting_variance", m.variance.str());
        }
        return;
    }

    Range tr = cfg.t_range.value_or(Range{default_time(cfg), default_time(cfg)});
    for (long t = tr.lo; t <= tr.hi; ++t) {
        Rational mean(0), variance(0);
        switch (cfg.model) {
            case Model::Occupancy: {
                auto [m, v] = occupancy::mean_variance_exact(cfg.n, t);
                mean = m;
                variance = v;
                break;
            }
            case Model::Randomized: {
                auto mom = randomized::moments<Rational>(cfg.n, cfg.retention->value, t);
                mean = mom.mean_x;
                variance = mom.variance;
                for (int k = 0; k <= cfg.n; ++k) {
                    const Rational& fm = mom.factorial_moments_y[static_cast<std::size_t>(k)];
                    out.add(k, t, "factorial_moment_y",
                            cfg.backend == Backend::Float ? float_to_string(fm.to_double()) : fm.str());
                }
                break;
            }
            default: {
                // distribution moments by exact summation
                Rational second(0);
                for (int k = 0; k <= proc.n(); ++k) {
                    Rational mass = pmf_general(proc, k, t);
                    long state = k + state_base(cfg.model);
                    mean += Rational(state) * mass;
                    second += Rational(state) * Rational(state) * mass;
                }
                variance = second - mean * mean;
                break;
            }
        }
        if (cfg.backend == Backend::Float) {
            out.add(std::nullopt, t, "mean", float_to_string(mean.to_double()));
            out.add(std::nullopt, t, "variance", float_to_string(variance.to_double()));
        } else {
            out.add(std::nullopt, t, "mean", mean.str());
            out.add(std::nullopt, t, "variance", variance.str());
        }
    }
}

void run_simulate(const RunConfig& cfg, Emitter& out) {
    auto proc = convert_process<double>(exact_process(cfg));
    long t = cfg.t_range ? cfg.t_range->lo : default_time(cfg);
    auto res = sim::monte_carlo(proc, t, cfg.n_samples, cfg.seed);
    const int base = state_base(cfg.model);
    for (int k = 0; k <= proc.n(); ++k) {
        out.add(k + base, t, "sim_count", std::to_string(res.counts[static_cast<std::size_t>(k)]));
    }
    for (int k = 0; k <= proc.n(); ++k) {
        out.add(k + base, t, "sim_freq", float_to_string(res.empirical_pmf[static_cast<std::size_t>(k)]));
        out.add(k + base, t, "sim_se", float_to_string(res.standard_errors[static_cast<std::size_t>(k)]));
    }
    out.add(std::nullopt, t, "sim_mean", float_to_string(res.empirical_mean + base));
}

// Appendix-style rendering: integer numerators with the common denominator
// factored out in front.
void print_scaled_matrix(std::ostream& os, const std::string& name, const Matrix<Rational>& m, long denom) {
    os << name;
    if (denom != 1) os << " = (1/" << denom << ") *";
    os << " [\n";
    for (int i = 0; i < m.rows(); ++i) {
        os << "  ";
        for (int j = 0; j < m.cols(); ++j) {
            Rational scaled = m.at(i, j) * Rational(denom);
            os << scaled.str() << (j + 1 < m.cols() ? " " : "");
        }
        os << '\n';
    }
    os << "]\n";
}

void print_integer_matrix(std::ostream& os, const std::string& name, const Matrix<mpz_class>& m) {
    os << name << " = [\n";
    for (int i = 0; i < m.rows(); ++i) {
        os << "  ";
        for (int j = 0; j < m.cols(); ++j) {
            os << m.at(i, j).get_str() << (j + 1 < m.cols() ? " " : "");
        }
        os << '\n';
    }
    os << "]\n";
}

ordered_json integer_matrix_json(const Matrix<mpz_class>& m) {
    ordered_json rows = ordered_json::array();
    for (int i = 0; i < m.rows(); ++i) {
        ordered_json row = ordered_json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).get_str());
        rows.push_back(std::move(row));
    }
    return rows;
}

ordered_json scaled_matrix_json(const Matrix<Rational>& m, long denom) {
    ordered_json rows = ordered_json::array();
    for (int i = 0; i < m.rows(); ++i) {
        ordered_json row = ordered_json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back((m.at(i, j) * Rational(denom)).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

constexpr int kDenseCap = 64;

void run_matrices(const RunConfig& cfg, bool eigen_only, std::ostream& os) {
    if (cfg.model != Model::Occupancy && cfg.model != Model::Randomized)
        throw ConfigError("eigen/matrices support the occupancy and randomized models");
    if (cfg.n > kDenseCap) throw ConfigError("n exceeds the dense matrix cap (" + std::to_string(kDenseCap) + ")");
    occupancy::EigenSystem es = (cfg.model == Model::Randomized)
                                    ? randomized::eigen_system(cfg.n, cfg.retention->value)
                                    : occupancy::eigen_system(cfg.n);
    auto proc = exact_process(cfg);
    auto p_dense = oracle::to_dense(proc);

    // C over states 1..n as in the appendix display (classical only).
    Matrix<Rational> c_dense;
    if (cfg.model == Model::Occupancy && cfg.n >= 1) {
        auto c = occupancy::ccdf_matrix_occupancy<Rational>(cfg.n);
        c_dense = Matrix<Rational>(c.dimension(), c.dimension());
        for (int i = 0; i < c.dimension(); ++i)
            for (int j = 0; j < c.dimension(); ++j) c_dense.at(i, j) = c.at(i, j);
    } else {
        auto c = ccdf_matrix(proc);
        c_dense = Matrix<Rational>(c.dimension(), c.dimension());
        for (int i = 0; i < c.dimension(); ++i)
            for (int j = 0; j < c.dimension(); ++j) c_dense.at(i, j) = c.at(i, j);
    }

    Matrix<mpz_class> u_inv_sigma = es.u_inv * es.sigma;

    if (cfg.format == "json") {
        ordered_json doc;
        doc["meta"] = ordered_json{{"version", kVersion},
                                   {"command", eigen_only ? "eigen" : "matrices"},
                                   {"model", model_name(cfg.model)},
                                   {"n", cfg.n},
                                   {"p", cfg.retention ? cfg.retention->value.str() : std::string()},
                                   {"denominator", cfg.n}};
        ordered_json eig = ordered_json::array();
        for (const Rational& lambda : es.eigenvalues) eig.push_back(lambda.str());
        doc["eigenvalues"] = eig;
        doc["U"] = integer_matrix_json(es.u);
        doc["U_inv"] = integer_matrix_json(es.u_inv);
        if (!eigen_only) {
            doc["P_numerators"] = scaled_matrix_json(p_dense, cfg.n);
            doc["Sigma"] = integer_matrix_json(es.sigma);
            doc["U_inv_Sigma"] = integer_matrix_json(u_inv_sigma);
            doc["C_numerators"] = scaled_matrix_json(c_dense, cfg.n);
            if (cfg.all_matrices) {
                doc["Sigma_inv"] = integer_matrix_json(es.sigma_inv);
                doc["Sigma_squared"] = integer_matrix_json(es.sigma * es.sigma);
                doc["V"] = integer_matrix_json(occupancy::c_eigenvector_matrix(cfg.n));
                doc["V_inv"] = integer_matrix_json(occupancy::c_eigenvector_matrix_inverse(cfg.n));
            }
        }
        os << doc.dump(2) << '\n';
        return;
    }
    if (cfg.format == "csv") throw ConfigError("eigen/matrices render as table or json");

    os << "eigenvalues:";
    for (const Rational& lambda : es.eigenvalues) os << ' ' << lambda.str();
    os << '\n';
    if (eigen_only) {
        print_integer_matrix(os, "U", es.u);
        print_integer_matrix(os, "U_inv", es.u_inv);
        return;
    }
    print_scaled_matrix(os, "P", p_dense, cfg.n);
    print_integer_matrix(os, "U", es.u);
    print_integer_matrix(os, "U_inv", es.u_inv);
    print_integer_matrix(os, "Sigma", es.sigma);
    print_integer_matrix(os, "U_inv_Sigma", u_inv_sigma);
    print_scaled_matrix(os, "C", c_dense, cfg.n);
    // Column-check row: every column of C sums to 1.
    os << "C_column_sums:";
    for (int j = 0; j < c_dense.cols(); ++j) {
        Rational col(0);
        for (int i = 0; i < c_dense.rows(); ++i) col += c_dense.at(i, j);
        os << ' ' << col.str();
    }
    os << '\n';
    if (cfg.all_matrices) {
        print_integer_matrix(os, "Sigma_inv", es.sigma_inv);
        print_integer_matrix(os, "Sigma_squared", es.sigma * es.sigma);
        if (cfg.model == Model::Occupancy) {
            print_integer_matrix(os, "V", occupancy::c_eigenvector_matrix(cfg.n));
            print_integer_matrix(os, "V_inv", occupancy::c_eigenvector_matrix_inverse(cfg.n));
        }
    }
}

void run_verify(const RunConfig& cfg, std::ostream& os) {
    RunConfig local = cfg;
    local.verify = true;
    for (Quantity q : {Quantity::Pmf, Quantity::Cdf, Quantity::Ccdf}) {
        Emitter sink(local, "verify");
        run_distribution(local, q, sink);
        os << "verified " << quantity_name(q) << " against the exact matrix-power oracle\n";
    }
}

void add_common_options(CLI::App* cmd, RunConfig& cfg, std::string& model_text, std::string& t_text,
                        std::string& k_text, std::string& p_text, std::string& pvec_text, std::string& pvec_file,
                        std::string& backend_text) {
    cmd->add_option("--model", model_text, "pbp | occupancy | randomized | complementary | binomial");
    cmd->add_option("--n", cfg.n, "population / state-space size");
    cmd->add_option("--t", t_text, "time, or range LO..HI");
    cmd->add_option("--k", k_text, "state, or range LO..HI (default: all states)");
    cmd->add_option("--r", cfg.r, "initial state (occupancy/randomized/complementary)");
    cmd->add_option("--p", p_text, "retention probability for the randomized model ('a/b' or decimal)");
    cmd->add_option("--pvec", pvec_text, "comma-separated transition probabilities for model pbp");
    cmd->add_option("--pvec-file", pvec_file, "file containing the transition probabilities");
    cmd->add_option("--backend", backend_text, "exact | float | logfloat (decimal inputs force float)");
    cmd->add_option("--format", cfg.format, "table | csv | json")->check(CLI::IsMember({"table", "csv", "json"}));
    cmd->add_flag("--verify", cfg.verify, "recompute every cell through the exact oracle");
    cmd->add_option("--seed", cfg.seed, "RNG seed");
    cmd->add_option("--N", cfg.n_samples, "Monte Carlo sample count");
}

void finalize_config(RunConfig& cfg, const std::string& model_text, const std::string& t_text,
                     const std::string& k_text, const std::string& p_text, const std::string& pvec_text,
                     const std::string& pvec_file, const std::string& backend_text) {
    if (!model_text.empty()) cfg.model = parse_model(model_text);
    if (!t_text.empty()) cfg.t_range = parse_range(t_text);
    if (!k_text.empty()) cfg.k_range = parse_range(k_text);

    bool any_decimal = false;
    if (!p_text.empty()) {
        cfg.retention = parse_probability(p_text);
        any_decimal |= cfg.retention->was_decimal;
    }
    std::string vec_source = pvec_text;
    if (!pvec_file.empty()) {
        std::ifstream in(pvec_file);
        if (!in) throw ConfigError("cannot open --pvec-file '" + pvec_file + "'");
        std::stringstream ss;
        ss << in.rdbuf();
        vec_source = ss.str();
    }
    if (!vec_source.empty()) {
        std::string token;
        for (char ch : vec_source) {
            if (ch == ',' || ch == ' ' || ch == '\n' || ch == '\t' || ch == '\r') {
                if (!token.empty()) {
                    cfg.pvec.push_back(parse_probability(token));
                    any_decimal |= cfg.pvec.back().was_decimal;
                    token.clear();
                }
            } else {
                token.push_back(ch);
            }
        }
        if (!token.empty()) {
            cfg.pvec.push_back(parse_probability(token));
            any_decimal |= cfg.pvec.back().was_decimal;
        }
        if (cfg.model == Model::Pbp && cfg.n == 0) cfg.n = static_cast<int>(cfg.pvec.size()) - 1;
    }

    if (!backend_text.empty()) {
        cfg.backend_given = true;
        if (backend_text == "exact") cfg.backend = Backend::Exact;
        else if (backend_text == "float") cfg.backend = Backend::Float;
        else if (backend_text == "logfloat") cfg.backend = Backend::Log;
        else throw ConfigError("unknown backend '" + backend_text + "'");
    }
    if (any_decimal) {
        if (cfg.backend_given && cfg.backend == Backend::Exact)
            throw ConfigError("decimal probability literals force the float backend; use 'a/b' fractions in exact mode");
        if (!cfg.backend_given) cfg.backend = Backend::Float;
    }
    if (cfg.model != Model::Pbp && cfg.n < 1) throw ConfigError("--n must be at least 1");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact and floating-point distributions of discrete-time pure birth processes"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string model_text, t_text, k_text, p_text, pvec_text, pvec_file, backend_text;

    auto* cmd_pmf = app.add_subcommand("pmf", "probability mass function Pr(X_t = k)");
    auto* cmd_cdf = app.add_subcommand("cdf", "distribution function Pr(X_t <= k)");
    auto* cmd_ccdf = app.add_subcommand("ccdf", "complementary distribution function Pr(X_t > k)");
    auto* cmd_moments = app.add_subcommand("moments", "mean/variance, factorial and hitting-time moments");
    auto* cmd_sim = app.add_subcommand("simulate", "Monte Carlo simulation via geometric waiting times");
    auto* cmd_eigen = app.add_subcommand("eigen", "eigenvalues and Pascal eigenvector matrices");
    auto* cmd_matrices = app.add_subcommand("matrices", "P, U, U_inv, Sigma, U_inv*Sigma, C displays");
    auto* cmd_verify = app.add_subcommand("verify", "check pmf/cdf/ccdf against the exact oracle");

    for (CLI::App* cmd : {cmd_pmf, cmd_cdf, cmd_ccdf, cmd_moments, cmd_sim, cmd_eigen, cmd_matrices, cmd_verify}) {
        add_common_options(cmd, cfg, model_text, t_text, k_text, p_text, pvec_text, pvec_file, backend_text);
    }
    int hitting = -1;
    cmd_moments->add_option("--hitting", hitting, "first-hitting-time moments of this state");
    cmd_matrices->add_flag("--all", cfg.all_matrices, "include Sigma_inv, Sigma^2, V, V_inv");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitConfig;
    }

    try {
        finalize_config(cfg, model_text, t_text, k_text, p_text, pvec_text, pvec_file, backend_text);
        if (hitting >= 0) cfg.hitting = hitting;

        if (cmd_pmf->parsed() || cmd_cdf->parsed() || cmd_ccdf->parsed()) {
            Quantity q = cmd_pmf->parsed() ? Quantity::Pmf : cmd_cdf->parsed() ? Quantity::Cdf : Quantity::Ccdf;
            Emitter out(cfg, quantity_name(q));
            run_distribution(cfg, q, out);
            out.render(std::cout);
        } else if (cmd_moments->parsed()) {
            Emitter out(cfg, "moments");
            run_moments(cfg, out);
            out.render(std::cout);
        } else if (cmd_sim->parsed()) {
            Emitter out(cfg, "simulate");
            run_simulate(cfg, out);
            out.render(std::cout);
        } else if (cmd_eigen->parsed()) {
            run_matrices(cfg, true, std::cout);
        } else if (cmd_matrices->parsed()) {
            run_matrices(cfg, false, std::cout);
        } else if (cmd_verify->parsed()) {
            run_verify(cfg, std::cout);
        }
    } catch (const VerifyError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitVerify;
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitConfig;
    }
    return 0;
}
