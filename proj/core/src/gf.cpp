#include "matkit/gf.hpp"

#include <array>

namespace matkit {

namespace {

struct PolyField {
    int p;       // prime base
    int deg;     // extension degree
    int modulus; // irreducible polynomial, base-p digit encoding
};

// x^2+x+1 over GF(2) is 0b111 = 7; x^3+x+1 is 0b1011 = 11;
// x^2+1 over GF(3) is digits (1,0,1) = 1*9 + 0*3 + 1 = 10.
bool lookup(int q, PolyField& out) {
    switch (q) {
        case 4: out = {2, 2, 7}; return true;
        case 8: out = {2, 3, 11}; return true;
        case 9: out = {3, 2, 10}; return true;
        default: return false;
    }
}

std::vector<int> digits(int v, int p, int len) {
    std::vector<int> d(len, 0);
    for (int i = 0; i < len; ++i) {
        d[i] = v % p;
        v /= p;
    }
    return d;
}

int undigits(const std::vector<int>& d, int p) {
    int v = 0;
    for (int i = static_cast<int>(d.size()) - 1; i >= 0; --i) v = v * p + d[i];
    return v;
}

}  // namespace

FiniteField::FiniteField(int q) : q_(q) {
    if (!is_supported_field(q))
        throw UnsupportedField("GF(" + std::to_string(q) + ") is not supported");
    build_tables();
    check_axioms();
}

void FiniteField::build_tables() {
    add_.assign(q_ * q_, 0);
    mul_.assign(q_ * q_, 0);
    neg_.assign(q_, 0);
    inv_.assign(q_, 0);

    PolyField pf;
    if (!lookup(q_, pf)) {
        // Prime field: plain modular arithmetic.
        p_ = q_;
        for (int a = 0; a < q_; ++a) {
            for (int b = 0; b < q_; ++b) {
                add_[a * q_ + b] = static_cast<std::uint8_t>((a + b) % q_);
                mul_[a * q_ + b] = static_cast<std::uint8_t>((a * b) % q_);
            }
            neg_[a] = static_cast<std::uint8_t>((q_ - a) % q_);
        }
    } else {
        p_ = pf.p;
        const int deg = pf.deg;
        auto mod_digits = digits(pf.modulus, p_, deg + 1);
        for (int a = 0; a < q_; ++a) {
            auto da = digits(a, p_, deg);
            for (int b = 0; b < q_; ++b) {
                auto db = digits(b, p_, deg);
                std::vector<int> sum(deg, 0);
                for (int i = 0; i < deg; ++i) sum[i] = (da[i] + db[i]) % p_;
                add_[a * q_ + b] = static_cast<std::uint8_t>(undigits(sum, p_));

                // Polynomial product reduced by the field modulus.
                std::vector<int> prod(2 * deg - 1, 0);
                for (int i = 0; i < deg; ++i)
                    for (int j = 0; j < deg; ++j)
                        prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
                for (int i = 2 * deg - 2; i >= deg; --i) {
                    int c = prod[i];
                    if (!c) continue;
                    prod[i] = 0;
                    // subtract c * x^(i-deg) * modulus
                    for (int j = 0; j <= deg; ++j) {
                        int k = i - deg + j;
                        prod[k] = ((prod[k] - c * mod_digits[j]) % p_ + p_) % p_;
                    }
                }
                prod.resize(deg);
                mul_[a * q_ + b] = static_cast<std::uint8_t>(undigits(prod, p_));
            }
            auto na = digits(a, p_, deg);
            for (int i = 0; i < deg; ++i) na[i] = (p_ - na[i]) % p_;
            neg_[a] = static_cast<std::uint8_t>(undigits(na, p_));
        }
    }
    for (int a = 1; a < q_; ++a)
        for (int b = 1; b < q_; ++b)
            if (mul_[a * q_ + b] == 1) inv_[a] = static_cast<std::uint8_t>(b);
}

std::uint8_t FiniteField::inv(std::uint8_t a) const {
    if (a == 0) throw BadParameters("zero has no multiplicative inverse");
    return inv_[a];
}

void FiniteField::check_axioms() const {
    auto fail = [&](const char* what) {
        throw ConstructionFailed(std::string("field axiom check failed: ") + what);
    };
    for (int a = 0; a < q_; ++a) {
        if (add(0, a) != a) fail("additive identity");
        if (mul(1, a) != a) fail("multiplicative identity");
        if (add(a, neg(a)) != 0) fail("additive inverse");
        if (a != 0 && mul(a, inv_[a]) != 1) fail("multiplicative inverse");
        for (int b = 0; b < q_; ++b) {
            if (add(a, b) != add(b, a)) fail("additive commutativity");
            if (mul(a, b) != mul(b, a)) fail("multiplicative commutativity");
            for (int c = 0; c < q_; ++c) {
                if (add(add(a, b), c) != add(a, add(b, c))) fail("additive associativity");
                if (mul(mul(a, b), c) != mul(a, mul(b, c))) fail("multiplicative associativity");
                if (mul(a, add(b, c)) != add(mul(a, b), mul(a, c))) fail("distributivity");
            }
        }
    }
    // Characteristic must match the prime base of q.
    std::uint8_t s = 0;
    for (int k = 1; k <= p_; ++k) {
        s = add(s, 1);
        if (k < p_ && s == 0) fail("characteristic too small");
    }
    if (s != 0) fail("characteristic mismatch");
}

bool is_supported_field(int q) {
    switch (q) {
        case 2: case 3: case 4: case 5: case 7: case 8: case 9: return true;
        default: return false;
    }
}

const FiniteField& gf(int q) {
    if (!is_supported_field(q))
        throw UnsupportedField("GF(" + std::to_string(q) + ") is not supported");
    static const std::array<FiniteField, 7> fields = {
        FiniteField(2), FiniteField(3), FiniteField(4), FiniteField(5),
        FiniteField(7), FiniteField(8), FiniteField(9)};
    switch (q) {
        case 2: return fields[0];
        case 3: return fields[1];
        case 4: return fields[2];
        case 5: return fields[3];
        case 7: return fields[4];
        case 8: return fields[5];
        default: return fields[6];
    }
}

}  // namespace matkit
