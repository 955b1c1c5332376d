#include "regskew/gf2poly.hpp"

#include <algorithm>
#include <atomic>
#include <unordered_set>

namespace regskew::gf2 {

namespace {

std::atomic<std::size_t> g_term_limit{std::size_t(1) << 20};

void check_same_ring(const Gf2Poly& p, const Gf2Poly& q) {
    if (p.num_generators() != q.num_generators())
        throw std::invalid_argument("gf2poly: generator-count mismatch");
}

void check_budget(std::size_t n) {
    if (n > term_limit())
        throw TermLimitError(term_limit());
}

} // namespace

std::size_t term_limit() { return g_term_limit.load(std::memory_order_relaxed); }
void set_term_limit(std::size_t limit) { g_term_limit.store(limit, std::memory_order_relaxed); }

Monomial::Monomial(std::vector<std::uint16_t> exps) : exps_(std::move(exps)), degree_(0) {
    for (std::size_t i = 0; i < exps_.size(); ++i)
        degree_ += std::uint64_t(i + 1) * exps_[i];
}

Monomial Monomial::generator(std::size_t num_generators, std::size_t index, std::uint16_t power) {
    if (index < 1 || index > num_generators)
        throw std::invalid_argument("Monomial::generator: index out of range");
    std::vector<std::uint16_t> e(num_generators, 0);
    e[index - 1] = power;
    return Monomial(std::move(e));
}

Monomial Monomial::times(const Monomial& other) const {
    if (exps_.size() != other.exps_.size())
        throw std::invalid_argument("Monomial::times: generator-count mismatch");
    Monomial r(exps_.size());
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        std::uint32_t s = std::uint32_t(exps_[i]) + other.exps_[i];
        if (s > 0xffff)
            throw std::overflow_error("Monomial::times: exponent exceeds 2^16 bound");
        r.exps_[i] = static_cast<std::uint16_t>(s);
    }
    r.degree_ = degree_ + other.degree_;
    return r;
}

Monomial Monomial::squared() const {
    Monomial r(exps_.size());
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        if (exps_[i] > 0x7fff)
            throw std::overflow_error("Monomial::squared: exponent exceeds 2^16 bound");
        r.exps_[i] = static_cast<std::uint16_t>(exps_[i] * 2);
    }
    r.degree_ = degree_ * 2;
    return r;
}

std::string Monomial::str() const {
    if (is_unit())
        return "1";
    std::string s;
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        if (exps_[i] == 0)
            continue;
        if (!s.empty())
            s += '*';
        s += 'w';
        s += std::to_string(i + 1);
        if (exps_[i] > 1) {
            s += '^';
            s += std::to_string(exps_[i]);
        }
    }
    return s;
}

bool canonical_less(const Monomial& a, const Monomial& b) {
    if (a.weighted_degree() != b.weighted_degree())
        return a.weighted_degree() < b.weighted_degree();
    return a.exponents() > b.exponents(); // lex descending within a degree
}

std::size_t MonomialHash::operator()(const Monomial& m) const {
    // FNV-1a over the exponent words
    std::size_t h = 1469598103934665603ull;
    for (std::uint16_t e : m.exponents()) {
        h ^= e;
        h *= 1099511628211ull;
    }
    return h;
}

Gf2Poly Gf2Poly::one(std::size_t num_generators) {
    Gf2Poly p(num_generators);
    p.terms_.push_back(Monomial(num_generators));
    return p;
}

Gf2Poly Gf2Poly::generator_sum(std::size_t num_generators) {
    Gf2Poly p(num_generators);
    for (std::size_t i = 1; i <= num_generators; ++i)
        p.terms_.push_back(Monomial::generator(num_generators, i));
    std::sort(p.terms_.begin(), p.terms_.end(), canonical_less);
    return p;
}

Gf2Poly Gf2Poly::from_terms(std::size_t num_generators, std::vector<Monomial> terms) {
    for (const Monomial& m : terms)
        if (m.num_generators() != num_generators)
            throw std::invalid_argument("Gf2Poly::from_terms: generator-count mismatch");
    std::sort(terms.begin(), terms.end(), canonical_less);
    // mod-2 collapse: pairs cancel
    std::vector<Monomial> out;
    for (std::size_t i = 0; i < terms.size();) {
        std::size_t j = i;
        while (j < terms.size() && terms[j] == terms[i])
            ++j;
        if ((j - i) % 2 == 1)
            out.push_back(terms[i]);
        i = j;
    }
    Gf2Poly p(num_generators);
    p.terms_ = std::move(out);
    return p;
}

bool Gf2Poly::has_constant_term() const {
    return !terms_.empty() && terms_.front().is_unit();
}

bool Gf2Poly::contains(const Monomial& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m, canonical_less);
    return it != terms_.end() && *it == m;
}

std::string Gf2Poly::str() const {
    if (terms_.empty())
        return "0";
    std::string s;
    for (const Monomial& m : terms_) {
        if (!s.empty())
            s += " + ";
        s += m.str();
    }
    return s;
}

Gf2Poly add(const Gf2Poly& p, const Gf2Poly& q) {
    check_same_ring(p, q);
    Gf2Poly r(p.gens_);
    std::size_t i = 0, j = 0;
    while (i < p.terms_.size() && j < q.terms_.size()) {
        if (p.terms_[i] == q.terms_[j]) {
            ++i;
            ++j; // cancels mod 2
        } else if (canonical_less(p.terms_[i], q.terms_[j])) {
            r.terms_.push_back(p.terms_[i++]);
        } else {
            r.terms_.push_back(q.terms_[j++]);
        }
    }
    r.terms_.insert(r.terms_.end(), p.terms_.begin() + i, p.terms_.end());
    r.terms_.insert(r.terms_.end(), q.terms_.begin() + j, q.terms_.end());
    check_budget(r.terms_.size());
    return r;
}

namespace {

void toggle(std::unordered_set<Monomial, MonomialHash>& acc, Monomial m) {
    auto it = acc.find(m);
    if (it != acc.end())
        acc.erase(it);
    else
        acc.insert(std::move(m));
}

Gf2Poly collect(std::size_t gens, std::unordered_set<Monomial, MonomialHash>& acc) {
    return Gf2Poly::from_terms(gens, std::vector<Monomial>(acc.begin(), acc.end()));
}

// Frobenius: squaring is termwise in characteristic 2 (cross terms cancel).
Gf2Poly square_truncated(const Gf2Poly& p, std::uint64_t max_degree) {
    std::vector<Monomial> out;
    for (const Monomial& m : p.terms())
        if (m.weighted_degree() * 2 <= max_degree)
            out.push_back(m.squared());
    return Gf2Poly::from_terms(p.num_generators(), std::move(out));
}

} // namespace

Gf2Poly mul_truncated(const Gf2Poly& p, const Gf2Poly& q, std::uint64_t max_degree) {
    check_same_ring(p, q);
    Gf2Poly r(p.gens_);
    if (p.is_zero() || q.is_zero())
        return r;
    const Gf2Poly& small = p.term_count() <= q.term_count() ? p : q;
    const Gf2Poly& big = p.term_count() <= q.term_count() ? q : p;
    std::unordered_set<Monomial, MonomialHash> acc;
    for (const Monomial& a : small.terms_) {
        std::uint64_t da = a.weighted_degree();
        if (da > max_degree)
            break; // terms are degree-sorted
        for (const Monomial& b : big.terms_) {
            if (da + b.weighted_degree() > max_degree)
                break;
            toggle(acc, a.times(b));
            check_budget(acc.size());
        }
    }
    return collect(p.gens_, acc);
}

Gf2Poly pow_truncated(const Gf2Poly& p, std::uint64_t e, std::uint64_t max_degree) {
    Gf2Poly result = Gf2Poly::one(p.num_generators());
    if (e == 0)
        return result;
    Gf2Poly base = truncate(p, max_degree);
    bool result_is_one = true;
    while (e > 0) {
        if (e & 1) {
            result = result_is_one ? base : mul_truncated(result, base, max_degree);
            result_is_one = false;
        }
        e >>= 1;
        if (e)
            base = square_truncated(base, max_degree);
    }
    return result;
}

Gf2Poly invert_series(const Gf2Poly& p, std::uint64_t max_degree) {
    if (!p.has_constant_term())
        throw std::invalid_argument("invert_series: no constant term, not invertible as a series");
    const std::size_t gens = p.num_generators();

    // v = p + 1 has minimum degree >= 1, so the geometric series
    // q = sum v^n satisfies q = 1 + v*q and can be solved slice by slice.
    std::vector<std::vector<Monomial>> v_by_degree(max_degree + 1);
    for (const Monomial& m : p.terms()) {
        if (m.is_unit())
            continue;
        if (m.weighted_degree() <= max_degree)
            v_by_degree[m.weighted_degree()].push_back(m);
    }

    std::vector<std::vector<Monomial>> q(max_degree + 1);
    q[0].push_back(Monomial(gens));
    std::size_t total = 1;
    std::unordered_set<Monomial, MonomialHash> acc;
    for (std::uint64_t n = 1; n <= max_degree; ++n) {
        acc.clear();
        for (std::uint64_t e = 1; e <= n; ++e) {
            if (v_by_degree[e].empty() || q[n - e].empty())
                continue;
            for (const Monomial& a : v_by_degree[e])
                for (const Monomial& b : q[n - e])
                    toggle(acc, a.times(b));
        }
        q[n].assign(acc.begin(), acc.end());
        std::sort(q[n].begin(), q[n].end(), canonical_less);
        total += q[n].size();
        check_budget(total);
    }

    std::vector<Monomial> out;
    out.reserve(total);
    for (auto& slice : q)
        out.insert(out.end(), slice.begin(), slice.end());
    return Gf2Poly::from_terms(gens, std::move(out));
}

Gf2Poly graded_component(const Gf2Poly& p, std::uint64_t degree) {
    Gf2Poly r(p.gens_);
    for (const Monomial& m : p.terms_)
        if (m.weighted_degree() == degree)
            r.terms_.push_back(m);
    return r;
}

Gf2Poly truncate(const Gf2Poly& p, std::uint64_t max_degree) {
    Gf2Poly r(p.gens_);
    for (const Monomial& m : p.terms_) {
        if (m.weighted_degree() > max_degree)
            break;
        r.terms_.push_back(m);
    }
    return r;
}

} // namespace regskew::gf2
