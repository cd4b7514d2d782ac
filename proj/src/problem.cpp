#include "nzeta/problem.hpp"

#include <fstream>
#include <functional>
#include <sstream>

namespace nzeta {

namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

NFElem coordinate_from_text(const std::string& text, const NumberFieldPtr& field) {
    RatPoly p = parse_polynomial(text, 1, 't', true);
    NFElem t = NFElem::gen(field);
    NFElem acc = NFElem::zero(field);
    NFElem tp = NFElem::from_rat(field, Rat(1));
    int done = 0;
    for (int e = 0; e <= p.deg; ++e) {
        for (const auto& [m, c] : p.terms)
            if (m.e[0] == e) {
                acc = acc + tp * c;
                ++done;
            }
        tp = tp * t;
    }
    require(done == static_cast<int>(p.size()), ErrorCode::Parse, "bad coordinate expression");
    return acc;
}

std::vector<Int> modulus_from_text(const std::string& text) {
    RatPoly p = parse_polynomial(text, 1, 't', true);
    std::vector<Int> m(static_cast<size_t>(p.deg) + 1, Int(0));
    for (const auto& [mono, c] : p.terms) {
        require(c.get_den() == 1, ErrorCode::Parse, "field modulus must have integer coefficients");
        m[mono.e[0]] = Int(c.get_num());
    }
    return m;
}

}  // namespace

ProblemInput parse_problem_text(const std::string& text, const std::string& name) {
    ProblemInput in;
    std::vector<std::string> point_lines;
    std::string f_line;
    std::string field_line;

    std::istringstream is(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(is, raw)) {
        ++lineno;
        std::string line = raw;
        size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        size_t eq = line.find('=');
        require(eq != std::string::npos, ErrorCode::Parse,
                name + ":" + std::to_string(lineno) + ": expected key = value");
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key == "n") {
            in.n = std::stoi(value);
        } else if (key == "p") {
            in.p = Int(value);
        } else if (key == "f") {
            f_line = value;
        } else if (key == "field") {
            field_line = value;
        } else if (key == "point") {
            point_lines.push_back(value);
        } else if (key == "precision") {
            in.precision = std::stoi(value);
        } else if (key == "terms") {
            in.terms = std::stoi(value);
        } else if (key == "transversal") {
            in.transversal = std::stoi(value);
        } else if (key == "budget") {
            in.budget = std::stoll(value);
        } else {
            fail(ErrorCode::Parse, name + ":" + std::to_string(lineno) + ": unknown key " + key);
        }
    }

    require(in.n >= 2 && in.n + 1 <= kMaxVars, ErrorCode::Parse, "n out of range");
    require(!f_line.empty(), ErrorCode::Parse, "missing polynomial f");
    in.f = parse_polynomial(f_line, in.n + 1);
    in.f.check_homogeneous();
    for (const auto& [m, c] : in.f.terms)
        require(c.get_den() == 1, ErrorCode::Parse, "f must have integer coefficients");

    in.field = field_line.empty() ? NumberField::rationals()
                                  : std::make_shared<NumberField>(modulus_from_text(field_line));

    for (const auto& pl : point_lines) {
        std::string s = trim(pl);
        require(s.size() >= 2 && s.front() == '[' && s.back() == ']', ErrorCode::Parse,
                "point must be [c0, c1, ...]");
        s = s.substr(1, s.size() - 2);
        std::vector<NFElem> coords;
        size_t pos = 0;
        while (pos <= s.size()) {
            size_t comma = s.find(',', pos);
            std::string piece =
                comma == std::string::npos ? s.substr(pos) : s.substr(pos, comma - pos);
            coords.push_back(coordinate_from_text(trim(piece), in.field));
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        require(static_cast<int>(coords.size()) == in.n + 1, ErrorCode::Parse,
                "point has wrong coordinate count");
        in.points.push_back(std::move(coords));
    }
    return in;
}

ProblemInput parse_problem_file(const std::string& path) {
    std::ifstream f(path);
    require(f.good(), ErrorCode::Parse, "cannot open input file " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_problem_text(ss.str(), path);
}

std::string Report::str() const {
    std::string out;
    for (const auto& [k, v] : rows_) {
        out += k;
        out += " = ";
        out += v;
        out += "\n";
    }
    return out;
}

void Report::write(const std::string& path) const {
    std::ofstream f(path);
    require(f.good(), ErrorCode::Parse, "cannot open output file " + path);
    f << str();
}

std::string Report::get(const std::string& key) const {
    for (const auto& [k, v] : rows_)
        if (k == key) return v;
    return "";
}

RatPoly substitute_linear(const RatPoly& f, const std::vector<std::vector<long>>& B) {
    int nv = f.nv;
    std::vector<RatPoly> lin;
    for (int i = 0; i < nv; ++i) {
        RatPoly l(nv, 1);
        for (int k = 0; k < nv; ++k)
            if (B[static_cast<size_t>(i)][static_cast<size_t>(k)]) {
                Monomial m(nv);
                m.e[k] = 1;
                l.terms.emplace_back(m, Rat(B[static_cast<size_t>(i)][static_cast<size_t>(k)]));
            }
        l.normalize();
        lin.push_back(std::move(l));
    }
    RatPoly out(nv, f.deg);
    for (const auto& [m, c] : f.terms) {
        RatPoly term = poly_one<Rat>(nv);
        for (int i = 0; i < nv; ++i)
            for (int e = 0; e < m.e[i]; ++e) term = mul(term, lin[static_cast<size_t>(i)]);
        out = add(out, scal(term, c));
    }
    return out;
}

namespace {

struct Effective {
    Int p;
    int precision = 0, terms = 0, transversal = -1;
    int64_t budget = 1000000000;
};

Effective effective_config(const ProblemInput& in, const RunOptions& opt) {
    Effective e;
    e.p = opt.prime != 0 ? opt.prime : in.p;
    e.precision = opt.precision > 0 ? opt.precision : in.precision;
    e.terms = opt.terms > 0 ? opt.terms : in.terms;
    e.transversal = opt.transversal >= 0 ? opt.transversal : in.transversal;
    e.budget = opt.budget > 0 ? opt.budget : in.budget;
    require(e.p > 0 && is_prime(e.p), ErrorCode::Parse, "p must be prime");
    require(e.p > in.n - 1, ErrorCode::Parse, "require p > n - 1");
    return e;
}

void validate_dimension(const ProblemInput& in) {
    require(in.f.nv == in.n + 1, ErrorCode::Parse, "variable count mismatch");
    require(in.f.deg >= 2, ErrorCode::Parse, "deg f must be at least 2");
}

std::string monomial_text(const Monomial& m) { return m.str('x'); }

// checks whether linear form ell (integer coefficients) is nonzero at every
// node, both exactly and after reduction mod p
bool form_clears_nodes(const std::vector<long>& ell, const SingularPointSet& pts,
                       const EquisingularityReport& gate, const ExtField* E) {
    for (const auto& pt : pts.points) {
        NFElem v = NFElem::zero(pt[0].field);
        for (size_t i = 0; i < pt.size(); ++i)
            if (ell[i]) v = v + pt[i] * Rat(ell[i]);
        if (v.is_zero()) return false;
    }
    if (E) {
        for (const auto& red : gate.reduced_points) {
            ExtField::Elem v = E->zero();
            for (size_t i = 0; i < red.coords.size(); ++i)
                if (ell[i]) v = E->add(v, E->scal(red.coords[i], static_cast<uint64_t>(
                                                                     ((ell[i] % static_cast<long>(E->fp.p)) +
                                                                      static_cast<long>(E->fp.p)) %
                                                                     static_cast<long>(E->fp.p))));
            if (E->is_zero(v)) return false;
        }
    }
    return true;
}

struct CoordinatePlan {
    bool identity = true;
    int i0 = 0;
    std::vector<std::vector<long>> A, B;  // y = A x, x = B y, det = +-1
    long det_b = 1;
    RatPoly f_y;
    std::vector<std::vector<NFElem>> nodes_y;
};

CoordinatePlan choose_coordinates(const ProblemInput& in, const Effective& eff,
                                  const SingularPointSet& pts,
                                  const EquisingularityReport& gate) {
    int nv = in.n + 1;
    CoordinatePlan plan;
    plan.f_y = in.f;
    plan.nodes_y = pts.points;
    if (pts.points.empty()) {
        plan.i0 = eff.transversal >= 0 ? eff.transversal : 0;
        return plan;
    }

    std::optional<ExtField> E;
    if (!gate.residue_field_modulus.empty())
        E.emplace(static_cast<uint64_t>(eff.p.get_ui()), gate.residue_field_modulus);

    auto coordinate_ok = [&](int v) {
        std::vector<long> ell(static_cast<size_t>(nv), 0);
        ell[static_cast<size_t>(v)] = 1;
        return form_clears_nodes(ell, pts, gate, E ? &*E : nullptr);
    };

    if (eff.transversal >= 0) {
        require(coordinate_ok(eff.transversal), ErrorCode::TransversalityFailure,
                "requested transversal variable hits a node");
        plan.i0 = eff.transversal;
        return plan;
    }
    for (int v = 0; v < nv; ++v)
        if (coordinate_ok(v)) {
            plan.i0 = v;
            return plan;
        }

    // no coordinate works: search a unimodular substitution with pivot row
    // y_v = x_v + sum c_j x_j
    for (int v = 0; v < nv; ++v) {
        std::vector<long> ell(static_cast<size_t>(nv), 0);
        for (long total = 1; total <= 4 * (nv - 1); ++total) {
            // enumerate c vectors with entries in [0,4] and given sum
            std::vector<long> c(static_cast<size_t>(nv), 0);
            std::function<bool(int, long)> rec = [&](int pos, long left) -> bool {
                if (pos == nv) {
                    if (left != 0) return false;
                    ell = c;
                    ell[static_cast<size_t>(v)] = 1;
                    return form_clears_nodes(ell, pts, gate, E ? &*E : nullptr);
                }
                if (pos == v) return rec(pos + 1, left);
                for (long ci = 0; ci <= std::min(left, 4L); ++ci) {
                    c[static_cast<size_t>(pos)] = ci;
                    if (rec(pos + 1, left - ci)) return true;
                }
                c[static_cast<size_t>(pos)] = 0;
                return false;
            };
            if (!rec(0, total)) continue;

            plan.identity = false;
            plan.i0 = v;
            plan.A.assign(static_cast<size_t>(nv), std::vector<long>(static_cast<size_t>(nv), 0));
            for (int i = 0; i < nv; ++i) plan.A[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;
            plan.A[static_cast<size_t>(v)] = ell;
            // B = A^{-1}: identity with row v replaced by 2 e_v - ell
            plan.B = plan.A;
            for (int j = 0; j < nv; ++j)
                plan.B[static_cast<size_t>(v)][static_cast<size_t>(j)] =
                    (j == v) ? 1 : -ell[static_cast<size_t>(j)];
            plan.det_b = 1;
            plan.f_y = substitute_linear(in.f, plan.B);
            plan.nodes_y.clear();
            for (const auto& pt : pts.points) {
                std::vector<NFElem> y;
                for (int i = 0; i < nv; ++i) {
                    NFElem acc = NFElem::zero(in.field);
                    for (int j = 0; j < nv; ++j)
                        if (plan.A[static_cast<size_t>(i)][static_cast<size_t>(j)])
                            acc = acc + pt[static_cast<size_t>(j)] *
                                            Rat(plan.A[static_cast<size_t>(i)][static_cast<size_t>(j)]);
                    y.push_back(acc);
                }
                plan.nodes_y.push_back(std::move(y));
            }
            return plan;
        }
    }
    fail(ErrorCode::TransversalityFailure, "no usable pivot hyperplane found");
}

}  // namespace

AnalyzeOutcome run_analyze(const ProblemInput& in, const RunOptions& opt) {
    validate_dimension(in);
    Effective eff = effective_config(in, opt);
    AnalyzeOutcome out;
    int n = in.n, N = in.f.deg;

    int maxdeg = opt.max_degree >= 0 ? opt.max_degree : (n + 2) * N;
    for (int j = 0; j <= maxdeg; ++j)
        out.dims.push_back({j, koszul_dim(in.f, n, j), koszul_dim(in.f, n + 1, j)});

    std::optional<SingularPointSet> pts;
    if (!in.points.empty()) pts.emplace(verify_singular_points(in.f, in.field, in.points));
    out.tau_rational = tau_count_rational(in.f);
    if (pts)
        require(pts->tau() == out.tau_rational, ErrorCode::NotSingular,
                "verified point count differs from the linear-algebra tau");
    out.gate = equisingularity_check(in.f, eff.p, pts ? &*pts : nullptr);
    if (n % 2 == 1) out.basis = e2_basis(in.f, out.tau_rational);

    Report& r = out.report;
    r.put("n", static_cast<long>(n));
    r.put("degree", static_cast<long>(N));
    r.put("p", eff.p);
    r.put("tau", out.tau_rational);
    r.put("tau_mod_p", out.gate.tau_mod_p);
    r.put("equisingular", out.gate.pass ? "pass" : "fail");
    if (!out.gate.reasons.empty()) {
        std::string joined;
        for (const auto& reason : out.gate.reasons) {
            if (!joined.empty()) joined += "; ";
            joined += reason;
        }
        r.put("equisingular.reasons", joined);
    }
    if (pts) {
        r.put("points.count", pts->tau());
        for (size_t i = 0; i < pts->points.size(); ++i) {
            bool odp = is_odp(in.f, pts->points[i]);
            r.put("points." + std::to_string(i) + ".odp", odp ? "true" : "false");
        }
    }
    for (const auto& row : out.dims) {
        std::string key = "dims.j" + std::to_string(row[0]);
        r.put(key + ".h" + std::to_string(n), row[1]);
        r.put(key + ".h" + std::to_string(n + 1), row[2]);
    }
    r.put("e2.count", static_cast<long>(out.basis.entries.size()));
    for (size_t i = 0; i < out.basis.entries.size(); ++i)
        r.put("e2." + std::to_string(i),
              monomial_text(out.basis.entries[i].h) + " @ s=" +
                  std::to_string(out.basis.entries[i].s));
    r.put("b_formula", b_formula(n, N));
    return out;
}

ZetaOutcome run_zeta(const ProblemInput& in, const RunOptions& opt) {
    validate_dimension(in);
    require(in.n % 2 == 1, ErrorCode::Parse, "the zeta pipeline targets odd n");
    Effective eff = effective_config(in, opt);
    int n = in.n, N = in.f.deg;

    std::optional<SingularPointSet> pts;
    if (!in.points.empty()) pts.emplace(verify_singular_points(in.f, in.field, in.points));
    int64_t tau = tau_count_rational(in.f);
    require(tau == 0 || pts.has_value(), ErrorCode::Parse,
            "singular surface needs its node coordinates in the input file");
    if (pts) {
        require(pts->tau() == tau, ErrorCode::NotSingular,
                "verified point count differs from the linear-algebra tau");
        for (const auto& pt : pts->points)
            require(is_odp(in.f, pt), ErrorCode::NotSingular, "a supplied point is not an ODP");
    }

    EquisingularityReport gate = equisingularity_check(in.f, eff.p, pts ? &*pts : nullptr);
    require(gate.pass, ErrorCode::Equisingularity,
            "equisingularity check failed: " + gate.summary());

    E2Basis basis = e2_basis(in.f, tau);
    int b = static_cast<int>(basis.entries.size());
    int D = eff.precision > 0 ? eff.precision : default_precision(b, eff.p, n);

    SingularPointSet empty;
    empty.field = in.field;
    CoordinatePlan plan = choose_coordinates(in, eff, pts ? *pts : empty, gate);

    E2Basis basis_y = plan.identity ? basis : e2_basis(plan.f_y, tau);
    ReductionContext ctx(plan.f_y, in.field, plan.nodes_y, basis_y, plan.i0);

    FrobeniusSeries series =
        plan.identity ? standard_series(in.f, eff.p, basis)
                      : substituted_series(in.f, plan.B, Int(plan.det_b), eff.p, plan.f_y, basis);

    FrobeniusOptions fopt;
    fopt.precision_digits = D;
    fopt.terms = eff.terms;
    fopt.early_stop = opt.early_stop;
    fopt.jobs = opt.jobs;
    fopt.trace = opt.dump_reductions;
    FrobeniusMatrix W = frobenius_matrix(eff.p, ctx, series, fopt);

    // transition back to the original-coordinate basis: S columns are the
    // coordinates of the pulled-back original basis elements
    std::vector<std::vector<Rat>> M = W.m;
    std::vector<std::vector<std::vector<Rat>>> trace = W.trace;
    if (!plan.identity) {
        std::vector<std::vector<Rat>> S(static_cast<size_t>(b), std::vector<Rat>(static_cast<size_t>(b)));
        for (int i = 0; i < b; ++i) {
            RatPoly h = poly_monomial(n + 1, basis.entries[static_cast<size_t>(i)].h, Rat(1));
            RatPoly hy = scal(substitute_linear(h, plan.B), Rat(plan.det_b));
            std::vector<Rat> col =
                ctx.reduce_to_coords(to_dense(hy), basis.entries[static_cast<size_t>(i)].s);
            for (int r = 0; r < b; ++r) S[static_cast<size_t>(r)][static_cast<size_t>(i)] = col[static_cast<size_t>(r)];
        }
        // solve S U = W.m column by column (Gauss-Jordan over Q)
        auto solve_cols = [&](const std::vector<std::vector<Rat>>& rhs) {
            size_t nb = static_cast<size_t>(b);
            std::vector<std::vector<Rat>> aug(nb, std::vector<Rat>(2 * nb, Rat(0)));
            for (size_t i = 0; i < nb; ++i)
                for (size_t j = 0; j < nb; ++j) {
                    aug[i][j] = S[i][j];
                    aug[i][nb + j] = rhs[i][j];
                }
            for (size_t col = 0; col < nb; ++col) {
                size_t piv = col;
                while (piv < nb && aug[piv][col] == 0) ++piv;
                require(piv < nb, ErrorCode::Internal, "basis transition matrix singular");
                std::swap(aug[col], aug[piv]);
                Rat inv = Rat(Rat(1) / aug[col][col]);
                for (size_t j = col; j < 2 * nb; ++j) aug[col][j] *= inv;
                for (size_t r = 0; r < nb; ++r) {
                    if (r == col || aug[r][col] == 0) continue;
                    Rat f2 = aug[r][col];
                    for (size_t j = col; j < 2 * nb; ++j) aug[r][j] -= f2 * aug[col][j];
                }
            }
            std::vector<std::vector<Rat>> out(nb, std::vector<Rat>(nb));
            for (size_t i = 0; i < nb; ++i)
                for (size_t j = 0; j < nb; ++j) out[i][j] = aug[i][nb + j];
            return out;
        };
        M = solve_cols(W.m);
        if (fopt.trace) {
            std::vector<std::vector<Rat>> ident(static_cast<size_t>(b),
                                                std::vector<Rat>(static_cast<size_t>(b), Rat(0)));
            for (int i = 0; i < b; ++i) ident[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;
            std::vector<std::vector<Rat>> sinv = solve_cols(ident);
            for (auto& per_elem : trace)
                for (auto& vec : per_elem) {
                    std::vector<Rat> mapped(static_cast<size_t>(b), Rat(0));
                    for (int r = 0; r < b; ++r)
                        for (int c2 = 0; c2 < b; ++c2)
                            mapped[static_cast<size_t>(r)] +=
                                sinv[static_cast<size_t>(r)][static_cast<size_t>(c2)] *
                                vec[static_cast<size_t>(c2)];
                    vec = std::move(mapped);
                }
        }
    }

    // recovery of the interesting factor: one digit is consumed by the /q
    // scaling, so the lift happens at D - 1
    std::vector<Int> Q = interesting_factor(M, eff.p, n, D - 1);
    degree_check(Q, n, N, tau);
    bool weil_ok = weil_root_check(Q, eff.p, n);
    require(weil_ok, ErrorCode::WeilViolation, "recovered Q has roots off the Weil circle");

    ZetaOutcome out;
    out.zeta = assemble_zeta(std::move(Q), eff.p, n);
    out.zeta.precision_digits = D;
    out.zeta.terms_used = W.terms_used;
    out.zeta.early_stop = W.early_stopped;
    out.zeta.weil_ok = weil_ok;
    out.basis = basis;
    out.frobenius = M;
    out.terms_used = W.terms_used;
    out.early_stopped = W.early_stopped;

    Report& r = out.report;
    r.put("n", static_cast<long>(n));
    r.put("degree", static_cast<long>(N));
    r.put("p", eff.p);
    r.put("tau", tau);
    std::string qc;
    for (size_t i = 0; i < out.zeta.q_coeffs.size(); ++i) {
        if (i) qc += " ";
        qc += out.zeta.q_coeffs[i].get_str();
    }
    r.put("q_coefficients", qc);
    r.put("q_factored", out.zeta.factored);
    std::string de;
    for (size_t i = 0; i < out.zeta.denom_exponents.size(); ++i) {
        if (i) de += " ";
        de += std::to_string(out.zeta.denom_exponents[i]);
    }
    r.put("denominator_exponents", de);
    {
        std::string zeta_str = "1 / (";
        for (int i = 0; i < n; ++i) {
            Int qi = pow_int(eff.p, static_cast<unsigned long>(i));
            zeta_str += "(1 - " + (i == 0 ? std::string("") : qi.get_str() + "*") + "T)";
        }
        zeta_str += " * " + out.zeta.factored + ")";
        r.put("zeta", zeta_str);
    }
    r.put("basis.count", static_cast<long>(basis.entries.size()));
    for (size_t i = 0; i < basis.entries.size(); ++i)
        r.put("basis." + std::to_string(i),
              monomial_text(basis.entries[i].h) + " @ s=" + std::to_string(basis.entries[i].s));
    for (size_t i = 0; i < M.size(); ++i) {
        std::string row;
        for (size_t j = 0; j < M[i].size(); ++j) {
            if (j) row += " ";
            row += M[i][j].get_str();
        }
        r.put("frobenius.row" + std::to_string(i), row);
    }
    r.put("diagnostics.precision", static_cast<long>(D));
    r.put("diagnostics.terms_bound",
          static_cast<long>(eff.terms > 0 ? eff.terms : truncation_bound(D, eff.p, n)));
    r.put("diagnostics.terms_used", static_cast<long>(W.terms_used));
    r.put("diagnostics.early_stop", W.early_stopped ? "true" : "false");
    r.put("diagnostics.pivot_variable", static_cast<long>(plan.i0));
    r.put("diagnostics.coordinate_change", plan.identity ? "identity" : "substituted");
    if (!plan.identity) {
        std::string rows;
        for (int i = 0; i < n + 1; ++i)
            for (int j = 0; j < n + 1; ++j) {
                if (!rows.empty()) rows += " ";
                rows += std::to_string(plan.A[static_cast<size_t>(i)][static_cast<size_t>(j)]);
            }
        r.put("diagnostics.substitution", rows);
    }
    r.put("diagnostics.weil_root_check", weil_ok ? "pass" : "fail");
    r.put("diagnostics.equisingular", "pass");

    if (opt.dump_reductions) {
        for (size_t j = 0; j < trace.size(); ++j) {
            std::vector<Rat> cumulative(static_cast<size_t>(b), Rat(0));
            for (size_t k = 0; k < trace[j].size(); ++k) {
                std::string part, cum;
                for (int i = 0; i < b; ++i) {
                    cumulative[static_cast<size_t>(i)] += trace[j][k][static_cast<size_t>(i)];
                    if (i) part += " ", cum += " ";
                    part += trace[j][k][static_cast<size_t>(i)].get_str();
                    cum += cumulative[static_cast<size_t>(i)].get_str();
                }
                r.put("reductions." + std::to_string(j) + ".k" + std::to_string(k) + ".part", part);
                r.put("reductions." + std::to_string(j) + ".k" + std::to_string(k) + ".cumulative",
                      cum);
            }
        }
    }
    return out;
}

Report run_count(const ProblemInput& in, const RunOptions& opt) {
    validate_dimension(in);
    Effective eff = effective_config(in, opt);
    Report r;
    r.put("p", eff.p);
    r.put("r", static_cast<long>(opt.count_r));
    int64_t c = count_points(in.f, eff.p.get_ui(), opt.count_r, eff.budget);
    r.put("count", static_cast<long>(c));
    return r;
}

Report run_verify(const ProblemInput& in, const RunOptions& opt, const std::vector<Int>& q_coeffs,
                  const std::vector<int>& denom_exponents) {
    validate_dimension(in);
    Effective eff = effective_config(in, opt);
    Report r;
    r.put("p", eff.p);
    r.put("max_r", static_cast<long>(opt.verify_max_r));
    VerifyOutcome v = verify_zeta(q_coeffs, denom_exponents, in.f, eff.p.get_ui(),
                                  opt.verify_max_r, eff.budget);
    r.put("verdict", v.pass ? "pass" : "fail");
    return r;
}

}  // namespace nzeta
