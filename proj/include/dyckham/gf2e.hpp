#pragma once

#include <array>
#include <cstdint>

#include "dyckham/bitsource.hpp"
#include "dyckham/errors.hpp"

namespace dyckham::gf2e {

// Element of GF(2^ell) for ell <= 256, stored as the coefficient bits of a
// polynomial residue, little-endian words. Addition is XOR regardless of ell.
struct FieldElem {
    std::array<std::uint64_t, 4> w{};

    bool is_zero() const { return (w[0] | w[1] | w[2] | w[3]) == 0; }
    bool bit(unsigned i) const { return (w[i / 64] >> (i % 64)) & 1; }
    friend bool operator==(const FieldElem&, const FieldElem&) = default;
};

inline FieldElem elem_from_u64(std::uint64_t v) {
    FieldElem e;
    e.w[0] = v;
    return e;
}

// Arithmetic context: the degree and the fixed low-weight irreducible modulus
// x^ell + x^a (+ x^b + x^c) + 1 taken from a built-in table, so two contexts
// with equal ell always agree and fingerprints are comparable across runs.
class FieldCtx {
public:
    unsigned ell() const { return ell_; }
    unsigned words() const { return (ell_ + 63) / 64; }
    // middle exponents of the modulus, descending, zero-padded
    std::array<unsigned, 3> modulus_mids() const { return mids_; }

    FieldElem zero() const { return FieldElem{}; }
    FieldElem one() const { return elem_from_u64(1); }

    static FieldElem add(const FieldElem& a, const FieldElem& b) {
        FieldElem r;
        for (int i = 0; i < 4; ++i) r.w[i] = a.w[i] ^ b.w[i];
        return r;
    }

    FieldElem mul(const FieldElem& a, const FieldElem& b) const;
    FieldElem sqr(const FieldElem& a) const { return mul(a, a); }

    // square-and-multiply; pow(a, 0) == 1 including a == 0
    FieldElem pow(const FieldElem& a, std::uint64_t e) const;

    // a^(2^ell - 2); inverse(0) == 0 by convention
    FieldElem inverse(const FieldElem& a) const;

    // consumes exactly ell bits from the source
    FieldElem random_elem(BitSource& src) const;

    FieldElem from_words(const std::uint64_t* w, unsigned nwords) const;

    friend bool operator==(const FieldCtx&, const FieldCtx&) = default;

private:
    friend FieldCtx field_ctx_exact(unsigned degree);

    unsigned ell_ = 0;
    std::array<unsigned, 3> mids_{};
    // low part of the modulus (x^a ^ x^b ^ x^c ^ 1), two words cover all table entries
    std::array<std::uint64_t, 2> red_{};
};

// Public width ladder: all of 8..64 plus 96, 128, 192, 256. Rounds the request
// up to the next supported width; throws RequestTooLarge beyond 256.
FieldCtx field_for(unsigned ell_requested);

// Any exact degree in 2..256 (used internally by hash families and biased
// spaces whose parameters call for small or odd-sized fields).
FieldCtx field_ctx_exact(unsigned degree);

// Incremental table of alpha^(2^t), for computing alpha^j with popcount(j)
// multiplications instead of a full square-and-multiply ladder.
class PowTable {
public:
    PowTable() = default;
    PowTable(const FieldCtx& ctx, const FieldElem& alpha, unsigned max_bits);
    FieldElem pow(const FieldCtx& ctx, std::uint64_t e) const;
    std::uint64_t size_bytes() const { return sq_.size() * sizeof(FieldElem); }

private:
    std::array<FieldElem, 64> sq_{};
    struct Span { unsigned n = 0; unsigned size() const { return n; } };
    Span sq_span_{};
    unsigned nbits_ = 0;

public:
    unsigned bits() const { return nbits_; }
};

} // namespace dyckham::gf2e
