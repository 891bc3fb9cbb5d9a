#include "jacobitype/suites.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <thread>

#include "jacobitype/high_order.hpp"
#include "jacobitype/jacobi_type.hpp"
#include "jacobitype/orthogonality.hpp"
#include "jacobitype/random_poly.hpp"
#include "jacobitype/special.hpp"
#include "jacobitype/ultraspherical.hpp"

namespace jacobitype {

namespace {

// A verification mismatch: the identity under test does not hold.
struct Mismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void check(bool ok, const std::string& what) {
    if (!ok) throw Mismatch(what);
}

void check_zero(const Poly& p, const std::string& what) {
    check(p.is_zero(), what + ": nonzero residual " + p.str());
}

using Params = std::map<std::string, std::string>;

struct SuiteCase {
    Params params;
    std::function<void()> run;
};

// Deterministic per-case seed derived from the grid seed and the parameters.
unsigned long case_seed(unsigned long base, const Params& params) {
    unsigned long h = 1469598103934665603ull ^ base;
    for (const auto& [k, v] : params)
        for (const char c : k + "=" + v) {
            h ^= static_cast<unsigned long>(static_cast<unsigned char>(c));
            h *= 1099511628211ull;
        }
    return h;
}

std::vector<Rational> rationals(std::initializer_list<const char*> values) {
    std::vector<Rational> out;
    for (const char* v : values) out.push_back(Rational::from_string(v));
    return out;
}

const std::vector<Rational>& default_alphas() {
    static const auto v = rationals({"0", "1", "2", "3"});
    return v;
}

const std::vector<Rational>& default_betas() {
    static const auto v = rationals({"-1/2", "0", "1/2", "1", "5/2", "7/3"});
    return v;
}

const std::vector<Rational>& default_masses() {
    static const auto v = rationals({"1", "1/3"});
    return v;
}

std::vector<Rational> pick(const std::vector<Rational>& user, const std::vector<Rational>& def) {
    return user.empty() ? def : user;
}

long pick_n(long user, long def) { return user < 0 ? def : user; }

void require_grid(bool ok, const std::string& what) {
    if (!ok) throw InvalidGrid(what);
}

void validate_betas_above_minus_one(const std::vector<Rational>& betas) {
    for (const auto& b : betas) require_grid(b > -1, "beta must exceed -1, got " + b.str());
}

void validate_nonneg_ints(const std::vector<Rational>& vals, const std::string& name) {
    for (const auto& v : vals)
        require_grid(v.is_nonnegative_integer(), name + " must be a nonnegative integer, got " + v.str());
}

void validate_masses(const std::vector<Rational>& masses) {
    for (const auto& m : masses) require_grid(m >= 0, "mass must be nonnegative, got " + m.str());
}

std::string param(const Rational& r) { return r.str(); }

// --- suite: routes ----------------------------------------------------------

std::vector<SuiteCase> build_routes(const SuiteGrid& grid) {
    const auto alphas = pick(grid.alphas, default_alphas());
    const auto betas = pick(grid.betas, default_betas());
    validate_nonneg_ints(alphas, "alpha");
    validate_betas_above_minus_one(betas);

    std::vector<SuiteCase> cases;
    for (const auto& a : alphas)
        for (const auto& b : betas) {
            Params params{{"alpha", param(a)}, {"beta", param(b)}};
            cases.push_back({params, [a, b] {
                const HighOpParams prm(a.to_long(), b);
                const DiffOp reference = explicit_operator(prm);
                check(reference.order() == prm.order(), "operator order");
                check(reference.coeff(0).is_zero(), "operator has an order-0 term");
                check(reference.polynomial_coefficients(), "non-polynomial coefficient survived");
                check(elementary_operator(prm) == reference, "action-extracted route differs from explicit");
                check(bavinck_operator(prm) == reference, "commuting-factor route differs from explicit");
                check(factorized_operator(prm) == reference, "ordered-factor route differs from explicit");
                check(recurrence_operator(prm) == reference, "order-recurrence route differs from explicit");
                if (prm.alpha == 1) {
                    // The scalar-shift factors commute; asserted once rather than assumed.
                    const DiffOp f0 = bavinck_factor(prm, 0);
                    const DiffOp f1 = bavinck_factor(prm, 1);
                    const DiffOp f2 = bavinck_factor(prm, 2);
                    check(compose(f0, compose(f1, f2)) == compose(f2, compose(f1, f0)),
                          "commuting factors fail to commute");
                }
            }});
        }
    return cases;
}

// --- suite: coeffs ----------------------------------------------------------

const std::vector<std::vector<Rational>>& golden_rows_alpha0_beta0() {
    static const std::vector<std::vector<Rational>> rows = {
        {-4, 4}, {-10, -4, 14}, {0, -8, 0, 8}, {1, 0, -2, 0, 1}};
    return rows;
}

constexpr const char* kGoldenCsvAlpha0Beta0 =
    "i,coeff0,coeff1,coeff2,coeff3,coeff4\n"
    "1,-4,4,0,0,0\n"
    "2,-10,-4,14,0,0\n"
    "3,0,-8,0,8,0\n"
    "4,1,0,-2,0,1\n";

std::vector<SuiteCase> build_coeffs(const SuiteGrid& grid) {
    const auto alphas = pick(grid.alphas, default_alphas());
    const auto betas = pick(grid.betas, default_betas());
    validate_nonneg_ints(alphas, "alpha");
    validate_betas_above_minus_one(betas);

    std::vector<SuiteCase> cases;
    for (const auto& a : alphas)
        for (const auto& b : betas) {
            Params params{{"alpha", param(a)}, {"beta", param(b)}};
            cases.push_back({params, [a, b] {
                const HighOpParams prm(a.to_long(), b);
                const Poly top = Poly{-1, 0, 1}.pow(prm.alpha + 2);
                for (long i = 1; i <= prm.order(); ++i) {
                    const Poly d = explicit_coefficient(i, prm);
                    check(d == leibniz_coefficient(i, prm),
                          "coefficient routes differ at i=" + std::to_string(i));
                    check(d.eval(1).is_zero(), "coefficient does not vanish at x=1, i=" + std::to_string(i));
                    check(d.degree() <= i, "coefficient degree exceeds i=" + std::to_string(i));
                }
                check(explicit_coefficient(prm.order(), prm) == top, "top coefficient is not (x^2-1)^(alpha+2)");
            }});
        }

    cases.push_back({Params{{"alpha", "0"}, {"beta", "0"}, {"golden", "table"}}, [] {
        const HighOpParams prm(0, 0);
        const auto& rows = golden_rows_alpha0_beta0();
        for (long i = 1; i <= 4; ++i)
            check(explicit_coefficient(i, prm).dense_coeffs() == rows[static_cast<std::size_t>(i - 1)],
                  "golden coefficient row i=" + std::to_string(i));
        check(coefficient_table(0, 0, TableFormat::csv) == kGoldenCsvAlpha0Beta0, "golden csv table");
    }});
    return cases;
}

// --- suite: eigen -------------------------------------------------------------

std::vector<SuiteCase> build_eigen(const SuiteGrid& grid) {
    const auto alphas = pick(grid.alphas, default_alphas());
    const auto betas = pick(grid.betas, default_betas());
    const auto masses = pick(grid.masses_n, rationals({"1", "1/3", "7"}));
    const long n_max = pick_n(grid.n_max, 12);
    validate_nonneg_ints(alphas, "alpha");
    validate_betas_above_minus_one(betas);
    validate_masses(masses);

    std::vector<SuiteCase> cases;
    for (const auto& a : alphas)
        for (const auto& b : betas)
            for (const auto& mass : masses) {
                Params params{{"alpha", param(a)}, {"beta", param(b)}, {"N", param(mass)}};
                cases.push_back({params, [a, b, mass, n_max] {
                    const HighOpParams prm(a.to_long(), b);
                    for (long n = 0; n <= n_max; ++n) {
                        const SpectralConstants sc = spectral_constants(n, prm, mass);
                        check(sc.combined == mass * sc.lambda_high + sc.coupling * sc.lambda_two,
                              "combined eigenvalue mismatch at n=" + std::to_string(n));
                        check_zero(full_residual(n, prm, mass), "spectral residual at n=" + std::to_string(n));
                    }
                }});
            }
    return cases;
}

// --- suite: mirror -------------------------------------------------------------

std::vector<SuiteCase> build_mirror(const SuiteGrid& grid) {
    const auto alphas = pick(grid.alphas, rationals({"-1/2", "1/2", "2"}));
    const auto betas = pick(grid.betas, rationals({"0", "1", "2", "3"}));
    const auto masses = pick(grid.masses_m, default_masses());
    const long n_max = pick_n(grid.n_max, 10);
    for (const auto& a : alphas) require_grid(a > -1, "alpha must exceed -1, got " + a.str());
    validate_nonneg_ints(betas, "beta");
    validate_masses(masses);

    std::vector<SuiteCase> cases;
    for (const auto& a : alphas)
        for (const auto& b : betas)
            for (const auto& mass : masses) {
                Params params{{"alpha", param(a)}, {"beta", param(b)}, {"M", param(mass)}};
                cases.push_back({params, [a, b, mass, n_max] {
                    for (long n = 0; n <= n_max; ++n)
                        check_zero(mirrored_residual(n, a, b.to_long(), mass),
                                   "mirrored residual at n=" + std::to_string(n));
                }});
            }
    return cases;
}

// --- suite: kernel -------------------------------------------------------------

std::vector<SuiteCase> build_kernel(const SuiteGrid& grid) {
    const auto alphas = pick(grid.alphas, default_alphas());
    const auto betas = pick(grid.betas, default_betas());
    const long n_max = pick_n(grid.n_max, 12);
    validate_nonneg_ints(alphas, "alpha");
    validate_betas_above_minus_one(betas);

    std::vector<SuiteCase> cases;
    for (const auto& a : alphas)
        for (const auto& b : betas) {
            Params params{{"alpha", param(a)}, {"beta", param(b)}};
            cases.push_back({params, [a, b, n_max] {
                const HighOpParams prm(a.to_long(), b);
                const JacobiParams jp{a, b};
                for (long n = 1; n <= n_max; ++n) {
                    const auto [first, second] = kernel_identity_residuals(n, prm);
                    check_zero(first, "modifier kernel identity at n=" + std::to_string(n));
                    check_zero(second, "plain-polynomial kernel identity at n=" + std::to_string(n));
                    const Poly rn = modifier_r(n, jp);
                    const Rational lam = spectral_constants(n, prm, 0).lambda_high;
                    check(elementary_apply(prm, rn) == rn.scaled(lam),
                          "modifier eigen-equation at n=" + std::to_string(n));
                }
            }});
        }
    return cases;
}

// --- suite: symmetry -------------------------------------------------------------

std::vector<SuiteCase> build_symmetry(const SuiteGrid& grid) {
    const auto alphas = pick(grid.alphas, default_alphas());
    const auto betas = pick(grid.betas, default_betas());
    const auto masses = pick(grid.masses_n, default_masses());
    validate_nonneg_ints(alphas, "alpha");
    validate_betas_above_minus_one(betas);
    validate_masses(masses);
    const unsigned long seed = grid.seed;

    std::vector<SuiteCase> cases;
    for (const auto& a : alphas)
        for (const auto& b : betas)
            for (const auto& mass : masses) {
                Params params{{"alpha", param(a)}, {"beta", param(b)}, {"N", param(mass)}};
                cases.push_back({params, [a, b, mass, seed, params] {
                    const InnerProductSpec with_mass(a, b, mass);
                    const InnerProductSpec no_mass(a, b, 0);
                    const HighOpParams prm(a.to_long(), b);
                    const DiffOp l2 = jacobi_operator({a, b});
                    const Rational coupling = factorial(prm.alpha + 2) * pochhammer(b + 1, prm.alpha + 1);
                    const Rational edge = Rational(2 * (prm.alpha + 1)) * coupling;
                    PolySampler sampler(case_seed(seed, params));
                    for (int t = 0; t < 20; ++t) {
                        const Poly f = sampler.next_poly(8);
                        const Poly g = sampler.next_poly(8);
                        check(symmetry_defect(f, g, with_mass).is_zero(), "symmetry defect nonzero");

                        const auto forms = boundary_forms(f, g, with_mass);
                        const auto mirror = boundary_forms(g, f, with_mass);
                        check(forms.s == mirror.s && forms.t == mirror.t, "boundary forms not symmetric");

                        const Poly high_f = elementary_apply(prm, f);
                        const Poly l2_f = l2.apply(f);
                        const Rational fp1 = f.derivative().eval(1);
                        check(inner_product(high_f, g, no_mass) == forms.s - edge * fp1 * g.eval(1),
                              "high-order boundary identity");
                        check(inner_product(l2_f, g, no_mass) == forms.t, "second-order boundary identity");
                        check(high_f.eval(1).is_zero(), "high-order action nonzero at x=1");
                        check(l2_f.eval(1) == Rational(2 * (prm.alpha + 1)) * fp1,
                              "second-order action at x=1");

                        // Term-by-term reconstruction of the symmetry argument.
                        const Poly combined = combined_operator_apply(f, with_mass);
                        const Rational term_high = mass * (forms.s - edge * fp1 * g.eval(1));
                        const Rational term_second = coupling * forms.t;
                        const Rational term_mass = mass * combined.eval(1) * g.eval(1);
                        check(term_mass == mass * edge * fp1 * g.eval(1), "mass boundary term");
                        check(inner_product(combined, g, with_mass) == term_high + term_second + term_mass,
                              "four-term expansion");
                        check(term_high + term_second + term_mass == mass * forms.s + coupling * forms.t,
                              "four-term cancellation");
                    }
                }});
            }
    return cases;
}

// --- suite: gram -------------------------------------------------------------

std::vector<SuiteCase> build_gram(const SuiteGrid& grid) {
    const auto alphas = pick(grid.alphas, default_alphas());
    const auto betas = pick(grid.betas, default_betas());
    const auto masses = pick(grid.masses_n, default_masses());
    const long n_max = pick_n(grid.n_max, 10);
    validate_nonneg_ints(alphas, "alpha");
    validate_betas_above_minus_one(betas);
    validate_masses(masses);

    std::vector<SuiteCase> cases;
    for (const auto& a : alphas)
        for (const auto& b : betas)
            for (const auto& mass : masses) {
                Params params{{"alpha", param(a)}, {"beta", param(b)}, {"N", param(mass)}};
                cases.push_back({params, [a, b, mass, n_max] {
                    const InnerProductSpec spec(a, b, mass);
                    const auto gram = gram_matrix(n_max, spec);
                    for (std::size_t i = 0; i < gram.size(); ++i)
                        for (std::size_t j = 0; j < gram.size(); ++j) {
                            if (i == j)
                                check(gram[i][j] > 0, "diagonal entry not positive at n=" + std::to_string(i));
                            else
                                check(gram[i][j].is_zero(), "off-diagonal entry nonzero at (" + std::to_string(i) +
                                                                "," + std::to_string(j) + "): " + gram[i][j].str());
                        }
                    check(gram[0][0] == Rational(1) + mass, "normalization entry");
                    if (a.is_zero() && b.is_zero() && mass == Rational(1))
                        check(gram[1][1] == Rational(10, 3), "spot value G[1][1]");
                }});
            }
    return cases;
}

// --- suite: ultra -------------------------------------------------------------

std::vector<SuiteCase> build_ultra(const SuiteGrid& grid) {
    const auto alphas = pick(grid.alphas, default_alphas());
    validate_nonneg_ints(alphas, "alpha");
    const unsigned long seed = grid.seed;

    std::vector<SuiteCase> cases;
    for (const auto& a : alphas) {
        Params params{{"family", "link"}, {"alpha", param(a)}};
        cases.push_back({params, [a, seed, params] {
            const long alpha = a.to_long();
            PolySampler sampler(case_seed(seed, params));
            for (int t = 0; t < 6; ++t) {
                check_zero(link_residual(alpha, sampler.next_poly(6)), "link identity");
                const Poly u = sampler.next_poly(6);
                check(Poly{1, 1} * elementary_apply(HighOpParams(alpha, Rational(alpha + 2)), Poly{-1, 1} * u) ==
                          ultra_apply(alpha, Poly{-1, 0, 1} * u),
                      "factorization variant of the link identity");
            }
        }});
    }

    for (long m = 0; m <= 5; ++m) {
        Params params{{"family", "leibniz"}, {"m", std::to_string(m)}};
        cases.push_back({params, [m, seed, params] {
            PolySampler sampler(case_seed(seed, params));
            const Poly xp1{1, 1};
            for (int t = 0; t < 3; ++t) {
                const Poly phi = sampler.next_poly(8);
                Poly lhs = xp1.pow(2 * m) * [&] {
                    Poly d = phi;
                    for (long k = 0; k < m; ++k) d = d.derivative();
                    return d;
                }();
                for (long k = 0; k < m; ++k) lhs = lhs.derivative();
                Poly rhs = xp1.pow(m) * phi;
                for (long k = 0; k < 2 * m; ++k) rhs = rhs.derivative();
                rhs = xp1.pow(m) * rhs;
                check(lhs == rhs, "two-sided Leibniz identity");
            }
        }});
    }

    for (long m = 0; m <= 5; ++m) {
        Params params{{"family", "bessel"}, {"m", std::to_string(m)}};
        cases.push_back({params, [m, seed, params] {
            PolySampler sampler(case_seed(seed, params));
            const auto delta_pow = [](Poly f, long k) {
                for (long i = 0; i < k; ++i) f = bessel_delta(f);
                return f;
            };
            for (int t = 0; t < 3; ++t) {
                const Poly phi = sampler.next_poly(11);
                const Poly core = Poly::monomial(1, 2 * m + 1) * delta_pow(phi, m + 1);
                Poly dexp = phi;
                for (long k = 0; k < 2 * m + 1; ++k) dexp = dexp.derivative();
                check(delta_pow(core, m) == dexp, "iterated Bessel-derivative identity");
                // The order-indexed expansion is exercised for m <= 4.
                for (long j = 0; j <= (m <= 4 ? m : -1); ++j) {
                    Poly rhs;
                    for (long k = j; k <= m; ++k) {
                        Poly dk = phi;
                        for (long s = 0; s < k + j + 1; ++s) dk = dk.derivative();
                        const Rational c = Rational(-2).pow(k - m) * factorial(2 * m - k - j) /
                                           (factorial(m - k) * factorial(k - j));
                        rhs += Poly::monomial(c, k - j) * dk;
                    }
                    check(delta_pow(core, j) == rhs,
                          "Bessel expansion at j=" + std::to_string(j));
                }
            }
        }});
    }
    return cases;
}

// --- suite: substitution -------------------------------------------------------

std::vector<SuiteCase> build_substitution(const SuiteGrid& grid) {
    const auto alphas = pick(grid.alphas, default_alphas());
    const auto masses = pick(grid.masses_n, default_masses());
    const long n_max = pick_n(grid.n_max, 10);
    validate_nonneg_ints(alphas, "alpha");
    validate_masses(masses);
    const unsigned long seed = grid.seed;

    std::vector<SuiteCase> cases;
    for (const auto& a : alphas) {
        const long alpha = a.to_long();
        {
            Params params{{"family", "operator"}, {"alpha", param(a)}};
            cases.push_back({params, [alpha, seed, params] {
                PolySampler sampler(case_seed(seed, params));
                for (int t = 0; t < 4; ++t) {
                    const Poly y = sampler.next_poly(6);
                    const auto even = substitution_residual_even(alpha, y);
                    check_zero(even.high_order, "even high-order substitution identity");
                    check_zero(even.second_order, "even second-order substitution identity");
                    const auto odd = substitution_residual_odd(alpha, y);
                    check_zero(odd.high_order, "odd high-order substitution identity");
                    check_zero(odd.second_order, "odd second-order substitution identity");
                }
            }});
        }
        {
            Params params{{"family", "constants"}, {"alpha", param(a)}};
            cases.push_back({params, [alpha, n_max] {
                const HighOpParams even_prm(alpha, Rational(-1, 2));
                const HighOpParams odd_prm(alpha, Rational(1, 2));
                const Rational two_pow = Rational(2).pow(2 * alpha + 4);
                check(Rational(2).pow(2 * alpha + 1) * spectral_constants(0, even_prm, 0).coupling ==
                          ultra_coupling(alpha),
                      "even coupling relation");
                check(Rational(2).pow(2 * alpha + 2) / Rational(4 * alpha + 6) *
                              spectral_constants(0, odd_prm, 0).coupling ==
                          ultra_coupling(alpha),
                      "odd coupling relation");
                for (long n = 0; n <= n_max; ++n) {
                    const auto even_sc = spectral_constants(n, even_prm, 0);
                    const auto odd_sc = spectral_constants(n, odd_prm, 0);
                    check(two_pow * even_sc.lambda_high == ultra_lambda_high(2 * n, alpha),
                          "even high eigenvalue relation at n=" + std::to_string(n));
                    check(Rational(4) * even_sc.lambda_two == ultra_lambda_two(2 * n, alpha),
                          "even second eigenvalue relation at n=" + std::to_string(n));
                    check(two_pow * odd_sc.lambda_high == ultra_lambda_high(2 * n + 1, alpha),
                          "odd high eigenvalue relation at n=" + std::to_string(n));
                    check(Rational(4) * odd_sc.lambda_two ==
                              ultra_lambda_two(2 * n + 1, alpha) - Rational(2 * (alpha + 1)),
                          "odd second eigenvalue relation at n=" + std::to_string(n));
                }
            }});
        }
        for (const auto& mass : masses) {
            Params params{{"family", "eigen-consequence"}, {"alpha", param(a)}, {"N", param(mass)}};
            cases.push_back({params, [alpha, mass] {
                const DiffOp l2 = jacobi_operator({Rational(alpha), Rational(alpha)});
                const Rational c_ultra = ultra_coupling(alpha);
                for (long n = 0; n <= 6; ++n) {
                    const Poly y_even =
                        jacobi_type_poly(n, {Rational(alpha), Rational(-1, 2)}, MassParams(0, Rational(2) * mass));
                    const Poly u = compose_quadratic(y_even);
                    const Poly res_even =
                        (ultra_apply(alpha, u) - u.scaled(ultra_lambda_high(2 * n, alpha))).scaled(mass) +
                        (l2.apply(u) - u.scaled(ultra_lambda_two(2 * n, alpha))).scaled(c_ultra);
                    check_zero(res_even, "even eigen-consequence at n=" + std::to_string(n));

                    const Poly y_odd = jacobi_type_poly(n, {Rational(alpha), Rational(1, 2)},
                                                        MassParams(0, Rational(4 * alpha + 6) * mass));
                    const Poly v = Poly::variable() * compose_quadratic(y_odd);
                    const Poly res_odd =
                        (ultra_apply(alpha, v) - v.scaled(ultra_lambda_high(2 * n + 1, alpha))).scaled(mass) +
                        (l2.apply(v) - v.scaled(ultra_lambda_two(2 * n + 1, alpha))).scaled(c_ultra);
                    check_zero(res_odd, "odd eigen-consequence at n=" + std::to_string(n));
                }
            }});
        }
    }
    return cases;
}

// --- suite: basics -------------------------------------------------------------

std::vector<SuiteCase> build_basics(const SuiteGrid& grid) {
    const auto alphas = pick(grid.alphas, rationals({"0", "1", "2", "-1/2", "5/2"}));
    const auto betas = pick(grid.betas, default_betas());
    const auto masses = pick(grid.masses_m, default_masses());
    const long n_max = pick_n(grid.n_max, 15);
    for (const auto& a : alphas) require_grid(a > -1, "alpha must exceed -1, got " + a.str());
    validate_betas_above_minus_one(betas);
    validate_masses(masses);
    const unsigned long seed = grid.seed;

    std::vector<SuiteCase> cases;
    for (const auto& a : alphas)
        for (const auto& b : betas) {
            Params params{{"alpha", param(a)}, {"beta", param(b)}};
            cases.push_back({params, [a, b, n_max, masses] {
                const JacobiParams jp{a, b};
                const DiffOp l2 = jacobi_operator(jp);

                for (long n = 0; n <= n_max; ++n) {
                    const Poly pn = jacobi_poly(n, jp);
                    check(pn.degree() == n, "degree of the Jacobi polynomial");
                    check(pn.eval(1) == pochhammer(a + 1, n) / factorial(n), "value at x=1");
                    check(l2.apply(pn) == pn.scaled(lambda2(n, jp)),
                          "second-order eigen-equation at n=" + std::to_string(n));

                    // Reflections.
                    const Rational sign = (n % 2 == 0) ? 1 : -1;
                    check(pn == jacobi_poly(n, {b, a}).reflected().scaled(sign),
                          "reflection at n=" + std::to_string(n));
                    check(modifier_q(n, jp) == modifier_r(n, {b, a}).reflected().scaled(sign),
                          "modifier reflection at n=" + std::to_string(n));
                    for (const auto& mass : masses) {
                        const Poly left = jacobi_type_poly(n, jp, MassParams(mass, 0));
                        const Poly right = jacobi_type_poly(n, {b, a}, MassParams(0, mass));
                        check(left == right.reflected().scaled(sign),
                              "one-mass reflection at n=" + std::to_string(n));
                        check(right.degree() == n && !right.leading().is_zero(),
                              "one-mass polynomial degree at n=" + std::to_string(n));
                    }
                }

                // Divergence form of the second-order operator.
                for (long k = 0; k <= 10; ++k) {
                    const Poly y = Poly::monomial(1, k);
                    WeightedPoly w = WeightedPoly::canonical(a + 1, b + 1, y.derivative());
                    w = w.derivative().shifted(-a, -b);
                    check(WeightedPoly::canonical(0, 0, l2.apply(y)) == w,
                          "divergence form at k=" + std::to_string(k));
                }

                // Contiguous relations.
                for (long n = 1; n <= n_max; ++n) {
                    const Poly pn = jacobi_poly(n, jp);
                    const Poly up = jacobi_poly(n, {a + 1, b});
                    const Poly up_prev = jacobi_poly(n - 1, {a + 1, b});
                    check(pn == jacobi_poly(n, {a + 1, b - 1}) - up_prev,
                          "parameter-shift relation at n=" + std::to_string(n));
                    check(pn.scaled(Rational(2 * n) + a + b + 1) ==
                              up.scaled(Rational(n) + a + b + 1) - up_prev.scaled(Rational(n) + b),
                          "three-term parameter relation at n=" + std::to_string(n));
                    check((Poly{Rational(1, 2), Rational(-1, 2)} * up).scaled(Rational(2 * n) + a + b + 2) ==
                              pn.scaled(Rational(n) + a + 1) - jacobi_poly(n + 1, jp).scaled(Rational(n + 1)),
                          "degree-raising relation at n=" + std::to_string(n));
                    check(pn.derivative() ==
                              jacobi_poly(n - 1, {a + 1, b + 1}).scaled((Rational(n) + a + b + 1) / 2),
                          "derivative relation at n=" + std::to_string(n));
                }
            }});
        }

    // Weighted differentiation formulas, parameters strictly inside the
    // admissible range on the side being lowered.
    for (const auto& g : rationals({"1/2", "1", "5/2", "3"}))
        for (const auto& d : rationals({"1/2", "1", "7/3"})) {
            Params params{{"family", "weighted-derivative"}, {"gamma", param(g)}, {"delta", param(d)}};
            cases.push_back({params, [g, d, n_max] {
                for (long n = 0; n <= n_max; ++n) {
                    const auto lhs =
                        WeightedPoly::canonical(g, 0, jacobi_poly(n, {g, d})).derivative();
                    const auto rhs = WeightedPoly::canonical(g - 1, 0, jacobi_poly(n, {g - 1, d + 1}))
                                         .times(Rational(n) + g);
                    check(lhs == rhs, "lowering the (x-1) exponent at n=" + std::to_string(n));
                    const auto lhs_m =
                        WeightedPoly::canonical(0, d, jacobi_poly(n, {g, d})).derivative();
                    const auto rhs_m = WeightedPoly::canonical(0, d - 1, jacobi_poly(n, {g + 1, d - 1}))
                                           .times(Rational(n) + d);
                    check(lhs_m == rhs_m, "lowering the (x+1) exponent at n=" + std::to_string(n));
                }
            }});
        }

    {
        Params params{{"family", "vandermonde"}};
        cases.push_back({params, [seed, params, n_max] {
            PolySampler sampler(case_seed(seed, params));
            for (int t = 0; t < 25; ++t) {
                const Rational p(sampler.next_index(-9, 9), sampler.next_index(1, 4));
                const Rational q(sampler.next_index(1, 12), sampler.next_index(1, 4));
                for (long n = 0; n <= n_max; ++n) {
                    check(hyp_terminating({{Rational(-n), p}, {q}}) == pochhammer(q - p, n) / pochhammer(q, n),
                          "terminating 2F1 summation at n=" + std::to_string(n));
                }
            }
        }});
    }
    {
        Params params{{"family", "pochhammer"}};
        cases.push_back({params, [seed, params] {
            PolySampler sampler(case_seed(seed, params));
            for (int t = 0; t < 25; ++t) {
                const Rational x(sampler.next_index(-9, 9), sampler.next_index(1, 5));
                const long j = sampler.next_index(0, 8);
                const long k = sampler.next_index(0, 8);
                check(pochhammer(x, j + k) == pochhammer(x, j) * pochhammer(x + Rational(j), k),
                      "rising-factorial split");
            }
        }});
    }
    return cases;
}

// --- execution -----------------------------------------------------------------

SuiteReport execute(const std::string& name, std::vector<SuiteCase> cases, int jobs) {
    const auto start = std::chrono::steady_clock::now();
    std::vector<CaseResult> results(cases.size());

    const auto run_one = [&](std::size_t i) {
        CaseResult& r = results[i];
        r.params = cases[i].params;
        try {
            cases[i].run();
            r.status = CaseStatus::pass;
        } catch (const Mismatch& m) {
            r.status = CaseStatus::fail;
            r.detail = m.what();
        } catch (const std::exception& e) {
            r.status = CaseStatus::error;
            r.detail = e.what();
        }
    };

    if (jobs <= 1 || cases.size() <= 1) {
        for (std::size_t i = 0; i < cases.size(); ++i) run_one(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> workers;
        const std::size_t count = std::min<std::size_t>(static_cast<std::size_t>(jobs), cases.size());
        workers.reserve(count);
        for (std::size_t w = 0; w < count; ++w)
            workers.emplace_back([&] {
                for (std::size_t i = next.fetch_add(1); i < results.size(); i = next.fetch_add(1)) run_one(i);
            });
        for (auto& w : workers) w.join();
    }

    std::sort(results.begin(), results.end(),
              [](const CaseResult& a, const CaseResult& b) { return a.params < b.params; });

    SuiteReport report;
    report.suite = name;
    report.cases = std::move(results);
    report.summary.total = static_cast<long>(report.cases.size());
    for (const auto& c : report.cases) {
        switch (c.status) {
            case CaseStatus::pass: ++report.summary.passed; break;
            case CaseStatus::fail: ++report.summary.failed; break;
            case CaseStatus::error: ++report.summary.errored; break;
        }
    }
    report.runtime_millis = static_cast<long>(
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count());
    return report;
}

}  // namespace

std::vector<std::string> suite_names() {
    return {"routes", "coeffs", "eigen", "mirror", "kernel", "symmetry", "gram", "ultra", "substitution", "basics"};
}

SuiteReport run_suite(const std::string& name, const SuiteGrid& grid) {
    if (grid.n_max < -1) throw InvalidGrid("n_max must be nonnegative");
    std::vector<SuiteCase> cases;
    if (name == "routes") cases = build_routes(grid);
    else if (name == "coeffs") cases = build_coeffs(grid);
    else if (name == "eigen") cases = build_eigen(grid);
    else if (name == "mirror") cases = build_mirror(grid);
    else if (name == "kernel") cases = build_kernel(grid);
    else if (name == "symmetry") cases = build_symmetry(grid);
    else if (name == "gram") cases = build_gram(grid);
    else if (name == "ultra") cases = build_ultra(grid);
    else if (name == "substitution") cases = build_substitution(grid);
    else if (name == "basics") cases = build_basics(grid);
    else throw UnknownSuite("unknown suite: " + name);
    return execute(name, std::move(cases), grid.jobs);
}

std::string coefficient_table(long alpha, const Rational& beta, TableFormat format, int float_digits) {
    if (alpha < 0) throw InvalidGrid("alpha must be a nonnegative integer, got " + std::to_string(alpha));
    if (beta <= -1) throw InvalidGrid("beta must exceed -1, got " + beta.str());
    const HighOpParams prm(alpha, beta);
    const long order = prm.order();

    std::vector<std::vector<Rational>> rows;
    rows.reserve(static_cast<std::size_t>(order));
    for (long i = 1; i <= order; ++i) rows.push_back(explicit_coefficient(i, prm).dense_coeffs());

    const auto approx = [float_digits](const Rational& r) {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.*g", float_digits, r.to_double());
        return std::string(buf);
    };

    std::ostringstream os;
    switch (format) {
        case TableFormat::csv: {
            os << "i";
            for (long e = 0; e <= order; ++e) os << ",coeff" << e;
            os << "\n";
            for (long i = 1; i <= order; ++i) {
                os << i;
                const auto& row = rows[static_cast<std::size_t>(i - 1)];
                for (long e = 0; e <= order; ++e) {
                    const std::size_t idx = static_cast<std::size_t>(e);
                    os << "," << (idx < row.size() ? row[idx].str() : "0");
                }
                os << "\n";
            }
            break;
        }
        case TableFormat::json: {
            nlohmann::json jrows = nlohmann::json::array();
            for (long i = 1; i <= order; ++i) {
                nlohmann::json coeffs = nlohmann::json::array();
                for (const auto& c : rows[static_cast<std::size_t>(i - 1)]) coeffs.push_back(c.str());
                jrows.push_back({{"i", i}, {"coeffs", std::move(coeffs)}});
            }
            const nlohmann::json j = {
                {"alpha", alpha}, {"beta", beta.str()}, {"order", order}, {"rows", std::move(jrows)}};
            os << j.dump(2) << "\n";
            break;
        }
        case TableFormat::text: {
            os << "order-" << order << " operator coefficients, alpha=" << alpha << ", beta=" << beta.str() << "\n";
            for (long i = 1; i <= order; ++i) {
                const auto& row = rows[static_cast<std::size_t>(i - 1)];
                os << "d_" << i << "(x) = " << explicit_coefficient(i, prm).str() << "\n    coeffs: [";
                for (std::size_t e = 0; e < row.size(); ++e) {
                    if (e) os << ", ";
                    os << row[e].str();
                    if (float_digits > 0 && !row[e].is_integer()) os << " (~" << approx(row[e]) << ")";
                }
                os << "]\n";
            }
            break;
        }
    }
    return os.str();
}

}  // namespace jacobitype
