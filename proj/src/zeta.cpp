#include "nzeta/zeta.hpp"

#include <complex>

#include "nzeta/padic.hpp"

namespace nzeta {

namespace {

std::vector<std::vector<Rat>> mat_mul(const std::vector<std::vector<Rat>>& a,
                                      const std::vector<std::vector<Rat>>& b) {
    size_t n = a.size();
    std::vector<std::vector<Rat>> c(n, std::vector<Rat>(n, Rat(0)));
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < n; ++k) {
            if (a[i][k] == 0) continue;
            for (size_t j = 0; j < n; ++j)
                if (b[k][j] != 0) c[i][j] += a[i][k] * b[k][j];
        }
    return c;
}

// exact division a / b over Z when it divides; returns empty on failure
std::vector<Int> poly_div_z(std::vector<Int> a, const std::vector<Int>& b) {
    if (a.size() < b.size() || b.empty()) return {};
    std::vector<Int> quot(a.size() - b.size() + 1, Int(0));
    for (size_t off = quot.size(); off-- > 0;) {
        size_t i = off + b.size() - 1;
        if (a[i] == 0) continue;
        if (a[i] % b.back() != 0) return {};
        Int q = a[i] / b.back();
        quot[off] = q;
        for (size_t j = 0; j < b.size(); ++j) a[off + j] -= q * b[j];
    }
    for (const auto& c : a)
        if (c != 0) return {};
    return quot;
}

struct CircleFactors {
    std::vector<std::pair<std::string, int>> factors;
    std::vector<Int> remainder;
};

// Peels off integer factors whose roots lie exactly on |T| = 1/lam:
// (1 +- lam^a T^a) and 1 + c T + lam^2 T^2 with |c| <= 2 lam.
CircleFactors strip_circle_factors(std::vector<Int> rem, const Int& lam) {
    CircleFactors out;
    while (rem.size() > 1 && rem.back() == 0) rem.pop_back();
    auto try_divide = [&](const std::vector<Int>& fac, const std::string& label) {
        int count = 0;
        for (;;) {
            if (rem.size() < fac.size()) break;
            std::vector<Int> quot = poly_div_z(rem, fac);
            if (quot.empty()) break;
            rem = std::move(quot);
            ++count;
        }
        if (count) out.factors.emplace_back(label, count);
    };
    for (int a = 1; a <= static_cast<int>(rem.size()) - 1; ++a) {
        Int ca = pow_int(lam, static_cast<unsigned long>(a));
        for (int sign : {-1, +1}) {
            std::vector<Int> fac(static_cast<size_t>(a) + 1, Int(0));
            fac[0] = 1;
            fac[static_cast<size_t>(a)] = sign * ca;
            std::string label = "(1 " + std::string(sign > 0 ? "+ " : "- ") + ca.get_str() + "*T" +
                                (a > 1 ? "^" + std::to_string(a) : "") + ")";
            try_divide(fac, label);
        }
    }
    Int lam2 = lam * lam;
    for (Int c = -2 * lam + 1; c < 2 * lam; ++c) {
        if (rem.size() < 3) break;
        if (c == 0) continue;  // 1 + lam^2 T^2 already tried above
        std::vector<Int> fac = {Int(1), c, lam2};
        std::string label = "(1 " + std::string(c > 0 ? "+ " : "- ") +
                            (c > 0 ? c : Int(-c)).get_str() + "*T + " + lam2.get_str() + "*T^2)";
        try_divide(fac, label);
    }
    out.remainder = std::move(rem);
    return out;
}

std::string poly_display(const std::vector<Int>& p) {
    std::string s = "(";
    bool first = true;
    for (size_t i = 0; i < p.size(); ++i) {
        if (p[i] == 0) continue;
        if (first) {
            if (p[i] < 0) s += "-";
            first = false;
        } else {
            s += (p[i] > 0 ? " + " : " - ");
        }
        Int a = p[i] < 0 ? Int(-p[i]) : p[i];
        if (a != 1 || i == 0) s += a.get_str();
        if (i >= 1) {
            if (a != 1) s += "*";
            s += "T";
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    if (first) s += "0";
    s += ")";
    return s;
}

}  // namespace

std::vector<Rat> charpoly(const std::vector<std::vector<Rat>>& M) {
    size_t b = M.size();
    if (b == 0) return {Rat(1)};
    // Faddeev-LeVerrier: c_k = -tr(M (M_{k-1} + c_{k-1} I))/k
    std::vector<Rat> c(b + 1, Rat(0));
    c[0] = 1;
    std::vector<std::vector<Rat>> Mk = M;
    for (size_t k = 1; k <= b; ++k) {
        if (k > 1) {
            std::vector<std::vector<Rat>> t = Mk;
            for (size_t i = 0; i < b; ++i) t[i][i] += c[k - 1];
            Mk = mat_mul(M, t);
        }
        Rat tr(0);
        for (size_t i = 0; i < b; ++i) tr += Mk[i][i];
        c[k] = -tr / Rat(static_cast<long>(k));
    }
    return c;  // det(I - MT) = sum c_k T^k
}

std::vector<Int> weil_coefficient_bounds(int b, const Int& q, int n) {
    std::vector<Int> g(static_cast<size_t>(b) + 1);
    for (int i = 0; i <= b; ++i) {
        Int bin = binom_int(static_cast<unsigned long>(b), static_cast<unsigned long>(i));
        long num = static_cast<long>(i) * (n - 1);
        if (num % 2 == 0) {
            g[i] = bin * pow_int(q, static_cast<unsigned long>(num / 2));
        } else {
            Int q2 = pow_int(q, static_cast<unsigned long>(num));
            Int r;
            mpz_sqrt(r.get_mpz_t(), q2.get_mpz_t());
            g[i] = bin * (r + 1);
        }
    }
    return g;
}

std::vector<Int> interesting_factor(const std::vector<std::vector<Rat>>& M, const Int& q, int n,
                                    int D) {
    size_t b = M.size();
    if (b == 0) return {Int(1)};
    std::vector<std::vector<Rat>> N(b, std::vector<Rat>(b));
    for (size_t i = 0; i < b; ++i)
        for (size_t j = 0; j < b; ++j) {
            N[i][j] = M[i][j] / Rat(q);
            require(Int(N[i][j].get_den()) % q != 0, ErrorCode::AmbiguousLift,
                    "Frobenius matrix entry not q-integral after scaling; raise the precision");
        }
    std::vector<Rat> c = charpoly(N);
    std::vector<Int> gamma = weil_coefficient_bounds(static_cast<int>(b), q, n);
    std::vector<Int> out(b + 1);
    out[0] = 1;
    for (size_t i = 1; i <= b; ++i) {
        TruncatedPadic residue = padic_embed(c[i], q, D);
        out[i] = padic_to_integer(residue, gamma[i]);
    }
    return out;
}

ZetaResult assemble_zeta(std::vector<Int> q_coeffs, const Int& q, int n) {
    require(!q_coeffs.empty() && q_coeffs[0] == 1, ErrorCode::Internal, "Q(0) must be 1");
    ZetaResult z;
    z.q_coeffs = std::move(q_coeffs);
    z.q = q;
    z.n = n;
    z.denom_exponents.assign(static_cast<size_t>(n), 1);
    z.factored = factor_for_display(z.q_coeffs, q, n);
    return z;
}

void degree_check(const std::vector<Int>& q_coeffs, int n, int N, int64_t tau) {
    int deg = static_cast<int>(q_coeffs.size()) - 1;
    while (deg > 0 && q_coeffs[static_cast<size_t>(deg)] == 0) --deg;
    Int expect = (pow_int(Int(N - 1), static_cast<unsigned long>(n + 1)) + Int(N - 1)) / N -
                 Int(static_cast<long>(tau));
    require(Int(deg) == expect, ErrorCode::DegreeMismatch,
            "deg Q = " + std::to_string(deg) + " but the count formula gives " + expect.get_str());
}

bool weil_root_check(const std::vector<Int>& q_coeffs, const Int& q, int n, double rel_tol) {
    require((n - 1) % 2 == 0, ErrorCode::Internal, "root check implemented for odd n");
    Int lam = pow_int(q, static_cast<unsigned long>((n - 1) / 2));
    CircleFactors cf = strip_circle_factors(q_coeffs, lam);
    const std::vector<Int>& rem = cf.remainder;
    int b = static_cast<int>(rem.size()) - 1;
    if (b <= 0) return true;

    double target = lam.get_d();
    std::vector<double> coef(static_cast<size_t>(b) + 1);
    for (int i = 0; i <= b; ++i) coef[static_cast<size_t>(i)] = rem[static_cast<size_t>(i)].get_d();
    // roots of x^b Q(1/x) have modulus lam
    auto eval = [&](std::complex<double> x) {
        std::complex<double> v = coef[0];
        for (int i = 1; i <= b; ++i) v = v * x + coef[static_cast<size_t>(i)];
        return v;
    };
    std::vector<std::complex<double>> roots(static_cast<size_t>(b));
    for (int i = 0; i < b; ++i)
        roots[static_cast<size_t>(i)] =
            target * std::polar(1.0, 0.7 + 6.2831853 * i / static_cast<double>(b));
    for (int iter = 0; iter < 800; ++iter) {
        double moved = 0;
        for (int i = 0; i < b; ++i) {
            std::complex<double> num = eval(roots[static_cast<size_t>(i)]);
            std::complex<double> den = 1.0;
            for (int j = 0; j < b; ++j)
                if (j != i) den *= roots[static_cast<size_t>(i)] - roots[static_cast<size_t>(j)];
            std::complex<double> delta = num / den;
            roots[static_cast<size_t>(i)] -= delta;
            moved = std::max(moved, std::abs(delta));
        }
        if (moved < 1e-13 * target) break;
    }
    for (const auto& r : roots)
        if (std::abs(std::abs(r) - target) > rel_tol * target) return false;
    return true;
}

std::string factor_for_display(const std::vector<Int>& q_coeffs, const Int& q, int n) {
    Int lam = 1;
    if ((n - 1) % 2 == 0) lam = pow_int(q, static_cast<unsigned long>((n - 1) / 2));
    CircleFactors cf = strip_circle_factors(q_coeffs, lam);
    std::string out;
    for (const auto& [label, count] : cf.factors) {
        if (!out.empty()) out += " * ";
        out += label;
        if (count > 1) out += "^" + std::to_string(count);
    }
    bool rem_trivial = cf.remainder.size() == 1 && cf.remainder[0] == 1;
    if (!rem_trivial) {
        if (!out.empty()) out += " * ";
        out += poly_display(cf.remainder);
    }
    if (out.empty()) out = "(1)";
    return out;
}

}  // namespace nzeta
