#include "tencode/gfq.hpp"

#include <sstream>
#include <stdexcept>

namespace tencode {

namespace {

bool prime_int(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

int ipow(int b, int e) {
    int r = 1;
    while (e-- > 0) r *= b;
    return r;
}

} // namespace

Field::Field(int p, std::vector<int> modulus) : p_(p), modulus_(std::move(modulus)) {
    if (!prime_int(p)) throw std::invalid_argument("characteristic " + std::to_string(p) + " is not prime");
    if (modulus_.size() < 2) throw std::invalid_argument("modulus must have degree >= 1");
    for (int& c : modulus_) {
        if (c < 0 || c >= p) throw std::invalid_argument("modulus coefficient out of range [0, p)");
    }
    if (modulus_.back() != 1) throw std::invalid_argument("modulus must be monic");
    m_ = static_cast<int>(modulus_.size()) - 1;
    if (ipow(p, m_) > 256 || m_ > 8) throw std::invalid_argument("field order exceeds 256");
    q_ = ipow(p, m_);

    add_.resize(q_ * q_);
    mul_.resize(q_ * q_);
    neg_.resize(q_);
    inv_.assign(q_, 0);
    auto enc = [&](const std::vector<int>& c) {
        int v = 0;
        for (int i = m_ - 1; i >= 0; --i) v = v * p_ + c[i];
        return static_cast<Elem>(v);
    };
    auto dec = [&](int v) {
        std::vector<int> c(m_);
        for (int i = 0; i < m_; ++i) { c[i] = v % p_; v /= p_; }
        return c;
    };
    for (int a = 0; a < q_; ++a) {
        auto ca = dec(a);
        std::vector<int> n(m_);
        for (int i = 0; i < m_; ++i) n[i] = (p_ - ca[i]) % p_;
        neg_[a] = enc(n);
        for (int b = 0; b < q_; ++b) {
            auto cb = dec(b);
            std::vector<int> s(m_);
            for (int i = 0; i < m_; ++i) s[i] = (ca[i] + cb[i]) % p_;
            add_[a * q_ + b] = enc(s);
            std::vector<int> prod(2 * m_, 0);
            for (int i = 0; i < m_; ++i)
                for (int j = 0; j < m_; ++j) prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p_;
            for (int d = 2 * m_ - 1; d >= m_; --d) {
                int c = prod[d];
                if (!c) continue;
                for (int i = 0; i <= m_; ++i)
                    prod[d - m_ + i] = ((prod[d - m_ + i] - c * modulus_[i]) % p_ + p_) % p_;
            }
            prod.resize(m_);
            mul_[a * q_ + b] = enc(prod);
        }
    }
    // reducible moduli produce zero divisors
    for (int a = 1; a < q_; ++a) {
        for (int b = 1; b < q_; ++b) {
            Elem r = mul_[a * q_ + b];
            if (r == 0) throw std::invalid_argument("modulus is not irreducible over GF(" + std::to_string(p_) + ")");
            if (r == 1) inv_[a] = static_cast<Elem>(b);
        }
    }
}

FieldPtr Field::create(int p, const std::vector<int>& modulus) {
    return FieldPtr(new Field(p, modulus));
}

FieldPtr Field::prime(int p) { return create(p, {0, 1}); }

FieldPtr Field::of_order(int q) {
    if (q < 2 || q > 256) throw std::invalid_argument("field order must be in [2, 256]");
    int p = 2;
    while (q % p) ++p;
    int m = 0, t = q;
    while (t % p == 0) { t /= p; ++m; }
    if (t != 1) throw std::invalid_argument(std::to_string(q) + " is not a prime power");
    if (m == 1) return prime(p);
    for (int v = 0; v < q; ++v) {
        std::vector<int> mod(m + 1);
        int x = v;
        for (int i = 0; i < m; ++i) { mod[i] = x % p; x /= p; }
        mod[m] = 1;
        if (mod[0] == 0) continue;
        try {
            return create(p, mod);
        } catch (const std::invalid_argument&) {
        }
    }
    throw std::logic_error("no irreducible polynomial found");
}

Elem Field::inv(Elem a) const {
    if (a == 0) throw std::domain_error("division by zero in " + describe());
    return inv_[a];
}

Elem Field::pow(Elem a, std::uint64_t e) const {
    Elem r = 1;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

Elem Field::frobenius(Elem a, int k) const {
    for (int i = 0; i < k; ++i) a = pow(a, static_cast<std::uint64_t>(p_));
    return a;
}

Elem Field::trace(Elem a) const {
    Elem s = 0, x = a;
    for (int i = 0; i < m_; ++i) {
        s = add(s, x);
        x = pow(x, static_cast<std::uint64_t>(p_));
    }
    return s;
}

std::vector<int> Field::coeffs(Elem a) const {
    std::vector<int> c(m_);
    int v = a;
    for (int i = 0; i < m_; ++i) { c[i] = v % p_; v /= p_; }
    return c;
}

Elem Field::from_coeffs(const std::vector<int>& c) const {
    if (static_cast<int>(c.size()) != m_)
        throw std::invalid_argument("expected " + std::to_string(m_) + " coefficients");
    int v = 0;
    for (int i = m_ - 1; i >= 0; --i) {
        if (c[i] < 0 || c[i] >= p_) throw std::invalid_argument("coefficient out of range [0, p)");
        v = v * p_ + c[i];
    }
    return static_cast<Elem>(v);
}

Elem Field::from_int(std::int64_t v) const {
    v %= p_;
    if (v < 0) v += p_;
    return static_cast<Elem>(v);
}

Elem Field::generator() const {
    if (m_ == 1) {
        for (int g = 1; g < q_; ++g) {
            int ord = 1;
            Elem x = static_cast<Elem>(g);
            while (x != 1) { x = mul(x, static_cast<Elem>(g)); ++ord; }
            if (ord == q_ - 1) return static_cast<Elem>(g);
        }
    }
    return static_cast<Elem>(p_);
}

std::string Field::describe() const {
    std::ostringstream os;
    os << "GF(" << q_ << ")";
    if (m_ > 1) {
        os << " mod [";
        for (std::size_t i = 0; i < modulus_.size(); ++i) os << (i ? "," : "") << modulus_[i];
        os << "]";
    }
    return os.str();
}

bool same_field(const FieldPtr& a, const FieldPtr& b) {
    return a && b && (a == b || *a == *b);
}

FieldElement::FieldElement(FieldPtr f, Elem v) : f_(std::move(f)), v_(v) {
    if (!f_) throw std::invalid_argument("null field");
    if (v >= f_->q()) throw std::invalid_argument("element out of range for " + f_->describe());
}

void FieldElement::check(const FieldElement& o) const {
    if (!same_field(f_, o.f_))
        throw std::invalid_argument("mixed-field operands: " + f_->describe() + " and " + o.f_->describe());
}

FieldElement FieldElement::operator+(const FieldElement& o) const { check(o); return {f_, f_->add(v_, o.v_)}; }
FieldElement FieldElement::operator-(const FieldElement& o) const { check(o); return {f_, f_->sub(v_, o.v_)}; }
FieldElement FieldElement::operator*(const FieldElement& o) const { check(o); return {f_, f_->mul(v_, o.v_)}; }
FieldElement FieldElement::operator/(const FieldElement& o) const { check(o); return {f_, f_->div(v_, o.v_)}; }
FieldElement FieldElement::operator-() const { return {f_, f_->neg(v_)}; }
FieldElement FieldElement::inverse() const { return {f_, f_->inv(v_)}; }
FieldElement FieldElement::pow(std::uint64_t e) const { return {f_, f_->pow(v_, e)}; }
FieldElement FieldElement::trace() const { return {f_, f_->trace(v_)}; }
bool FieldElement::operator==(const FieldElement& o) const { return same_field(f_, o.f_) && v_ == o.v_; }

namespace {

// Solves the square system over GF(p) given as integer rows; returns the inverse.
std::vector<std::vector<int>> invert_mod_p(std::vector<std::vector<int>> a, int p) {
    const int n = static_cast<int>(a.size());
    std::vector<std::vector<int>> inv(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) inv[i][i] = 1;
    auto minv = [p](int x) {
        for (int y = 1; y < p; ++y)
            if (x * y % p == 1) return y;
        return 0;
    };
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int r = c; r < n; ++r)
            if (a[r][c]) { piv = r; break; }
        if (piv < 0) throw std::invalid_argument("elements do not form a basis");
        std::swap(a[c], a[piv]);
        std::swap(inv[c], inv[piv]);
        int s = minv(a[c][c]);
        for (int j = 0; j < n; ++j) { a[c][j] = a[c][j] * s % p; inv[c][j] = inv[c][j] * s % p; }
        for (int r = 0; r < n; ++r) {
            if (r == c || !a[r][c]) continue;
            int f = a[r][c];
            for (int j = 0; j < n; ++j) {
                a[r][j] = ((a[r][j] - f * a[c][j]) % p + p) % p;
                inv[r][j] = ((inv[r][j] - f * inv[c][j]) % p + p) % p;
            }
        }
    }
    return inv;
}

} // namespace

bool is_basis(const Field& f, const std::vector<Elem>& elems) {
    if (static_cast<int>(elems.size()) != f.m()) return false;
    std::vector<std::vector<int>> rows;
    for (Elem e : elems) rows.push_back(f.coeffs(e));
    try {
        invert_mod_p(rows, f.p());
    } catch (const std::invalid_argument&) {
        return false;
    }
    return true;
}

FieldBasis polynomial_basis(const FieldPtr& f) {
    FieldBasis b{f, {}};
    Elem x = 1;
    for (int i = 0; i < f->m(); ++i) {
        b.elems.push_back(x);
        x = f->mul(x, static_cast<Elem>(f->p() == f->q() ? 1 : f->p()));
    }
    return b;
}

FieldBasis dual_basis(const FieldBasis& b) {
    const Field& f = *b.field;
    if (!is_basis(f, b.elems)) throw std::invalid_argument("elements do not form a basis");
    const int m = f.m();
    std::vector<std::vector<int>> gram(m, std::vector<int>(m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) gram[i][j] = f.trace(f.mul(b.elems[i], b.elems[j]));
    auto ginv = invert_mod_p(gram, f.p());
    FieldBasis d{b.field, std::vector<Elem>(m, 0)};
    for (int j = 0; j < m; ++j)
        for (int k = 0; k < m; ++k)
            d.elems[j] = f.add(d.elems[j], f.mul(f.from_int(ginv[k][j]), b.elems[k]));
    return d;
}

std::vector<Elem> expand(const FieldBasis& b, Elem a) {
    const Field& f = *b.field;
    auto d = dual_basis(b);
    std::vector<Elem> c(f.m());
    for (int i = 0; i < f.m(); ++i) c[i] = f.trace(f.mul(a, d.elems[i]));
    return c;
}

} // namespace tencode
