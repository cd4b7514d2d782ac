#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "nzeta/arith.hpp"

namespace nzeta {

// Q[t]/(m(t)) for a monic integer m, irreducible over Q (caller contract;
// checked only by trial factorization against small-prime residues).
// Elements are coordinate vectors in the basis 1, t, ..., t^{deg-1}.
class NumberField {
  public:
    // coefficients of m, ascending, size deg+1, monic
    explicit NumberField(std::vector<Int> modulus);

    static std::shared_ptr<const NumberField> rationals();  // m(t) = t

    int degree() const { return deg_; }
    const std::vector<Int>& modulus() const { return m_; }

    // reduction of t^k for k in [deg, 2deg-2]: integer coordinate rows
    const std::vector<Int>& power_row(int k) const { return pow_rows_[k - deg_]; }

    std::string str() const;

  private:
    int deg_;
    std::vector<Int> m_;
    std::vector<std::vector<Int>> pow_rows_;
};

using NumberFieldPtr = std::shared_ptr<const NumberField>;

struct NFElem {
    NumberFieldPtr field;
    std::vector<Rat> c;  // length field->degree()

    NFElem() = default;
    NFElem(NumberFieldPtr f, std::vector<Rat> coords) : field(std::move(f)), c(std::move(coords)) {}

    static NFElem zero(const NumberFieldPtr& f) { return NFElem(f, std::vector<Rat>(f->degree())); }
    static NFElem from_rat(const NumberFieldPtr& f, const Rat& x) {
        NFElem e = zero(f);
        e.c[0] = x;
        return e;
    }
    static NFElem gen(const NumberFieldPtr& f);  // the class of t

    bool is_zero() const {
        for (const auto& x : c)
            if (x != 0) return false;
        return true;
    }
    // rational iff all coordinates beyond the constant one vanish
    bool is_rational() const {
        for (size_t i = 1; i < c.size(); ++i)
            if (c[i] != 0) return false;
        return true;
    }
    const Rat& rational_value() const {
        require(is_rational(), ErrorCode::Internal, "element is not rational");
        return c[0];
    }

    std::string str() const;
};

NFElem operator+(const NFElem& a, const NFElem& b);
NFElem operator-(const NFElem& a, const NFElem& b);
NFElem operator-(const NFElem& a);
NFElem operator*(const NFElem& a, const NFElem& b);
NFElem operator*(const NFElem& a, const Rat& s);
bool operator==(const NFElem& a, const NFElem& b);
NFElem inverse(const NFElem& a);  // extended Euclid against m(t)

// Exact solve of A c = b over the number field by fraction-free forward
// elimination and back substitution. A square and nonsingular.
std::vector<NFElem> nf_solve_linear(std::vector<std::vector<NFElem>> A, std::vector<NFElem> b);

// Integer-coordinate variant used in evaluation loops: arithmetic stays in
// Z[t]/(m) (m monic), no rational normalization per operation.
struct NFInt {
    std::vector<Int> c;
};

NFInt nf_int_from(const NumberField& f, const NFElem& e, Int* den_out);  // e*den integral
NFInt nf_int_mul(const NumberField& f, const NFInt& a, const NFInt& b);
void nf_int_add_scaled(NFInt& acc, const NFInt& a, const Int& s);  // acc += s*a
NFElem nf_from_int(const NumberFieldPtr& f, const NFInt& a, const Int& den);

}  // namespace nzeta
