#include "regskew/dickson.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace regskew::dickson {

namespace {

std::uint32_t total_degree(const std::vector<std::uint16_t>& t) {
    return std::accumulate(t.begin(), t.end(), std::uint32_t(0));
}

bool term_less(const std::vector<std::uint16_t>& a, const std::vector<std::uint16_t>& b) {
    std::uint32_t da = total_degree(a), db = total_degree(b);
    if (da != db)
        return da < db;
    return a > b; // lex descending within a degree
}

} // namespace

void XPoly::normalize(std::vector<std::vector<std::uint16_t>> raw) {
    std::sort(raw.begin(), raw.end(), term_less);
    terms_.clear();
    for (std::size_t i = 0; i < raw.size();) {
        std::size_t j = i;
        while (j < raw.size() && raw[j] == raw[i])
            ++j;
        if ((j - i) % 2 == 1)
            terms_.push_back(raw[i]);
        i = j;
    }
}

XPoly XPoly::one(std::size_t num_vars) {
    XPoly p(num_vars);
    p.terms_.push_back(std::vector<std::uint16_t>(num_vars, 0));
    return p;
}

XPoly XPoly::variable(std::size_t num_vars, std::size_t index) {
    if (index < 1 || index > num_vars)
        throw std::invalid_argument("XPoly::variable: index out of range");
    XPoly p(num_vars);
    std::vector<std::uint16_t> t(num_vars, 0);
    t[index - 1] = 1;
    p.terms_.push_back(std::move(t));
    return p;
}

XPoly XPoly::linear_form(std::size_t num_vars, std::uint32_t mask) {
    std::vector<std::vector<std::uint16_t>> raw;
    for (std::size_t i = 0; i < num_vars; ++i) {
        if (mask >> i & 1) {
            std::vector<std::uint16_t> t(num_vars, 0);
            t[i] = 1;
            raw.push_back(std::move(t));
        }
    }
    XPoly p(num_vars);
    p.normalize(std::move(raw));
    return p;
}

std::uint32_t XPoly::degree() const {
    return terms_.empty() ? 0 : total_degree(terms_.back());
}

bool XPoly::is_homogeneous() const {
    if (terms_.empty())
        return true;
    std::uint32_t d = total_degree(terms_.front());
    for (const auto& t : terms_)
        if (total_degree(t) != d)
            return false;
    return true;
}

XPoly XPoly::plus(const XPoly& other) const {
    if (vars_ != other.vars_)
        throw std::invalid_argument("XPoly::plus: variable-count mismatch");
    std::vector<std::vector<std::uint16_t>> raw = terms_;
    raw.insert(raw.end(), other.terms_.begin(), other.terms_.end());
    XPoly p(vars_);
    p.normalize(std::move(raw));
    return p;
}

XPoly XPoly::times(const XPoly& other) const {
    if (vars_ != other.vars_)
        throw std::invalid_argument("XPoly::times: variable-count mismatch");
    std::vector<std::vector<std::uint16_t>> raw;
    raw.reserve(terms_.size() * other.terms_.size());
    for (const auto& a : terms_) {
        for (const auto& b : other.terms_) {
            std::vector<std::uint16_t> t(vars_);
            for (std::size_t i = 0; i < vars_; ++i)
                t[i] = static_cast<std::uint16_t>(a[i] + b[i]);
            raw.push_back(std::move(t));
        }
    }
    XPoly p(vars_);
    p.normalize(std::move(raw));
    return p;
}

XPoly XPoly::pow(std::uint32_t e) const {
    XPoly r = XPoly::one(vars_);
    XPoly b = *this;
    while (e) {
        if (e & 1)
            r = r.times(b);
        e >>= 1;
        if (e)
            b = b.times(b);
    }
    return r;
}

XPoly XPoly::substituted(const std::vector<std::uint32_t>& matrix_rows) const {
    if (matrix_rows.size() != vars_)
        throw std::invalid_argument("XPoly::substituted: matrix size mismatch");
    XPoly out(vars_);
    for (const auto& t : terms_) {
        XPoly term = XPoly::one(vars_);
        for (std::size_t i = 0; i < vars_; ++i)
            if (t[i] > 0)
                term = term.times(XPoly::linear_form(vars_, matrix_rows[i]).pow(t[i]));
        out = out.plus(term);
    }
    return out;
}

std::string XPoly::str() const {
    if (terms_.empty())
        return "0";
    std::string s;
    for (const auto& t : terms_) {
        if (!s.empty())
            s += " + ";
        if (total_degree(t) == 0) {
            s += '1';
            continue;
        }
        bool first = true;
        for (std::size_t i = 0; i < vars_; ++i) {
            if (t[i] == 0)
                continue;
            if (!first)
                s += '*';
            first = false;
            s += 'x';
            s += std::to_string(i + 1);
            if (t[i] > 1) {
                s += '^';
                s += std::to_string(t[i]);
            }
        }
    }
    return s;
}

DicksonAlgebra dickson_invariants(std::uint32_t m) {
    if (m < 1 || m > 4)
        throw std::invalid_argument("dickson_invariants: requires 1 <= m <= 4");
    const std::size_t vars = m;
    const std::uint32_t n = std::uint32_t(1) << m;

    // coeffs[i] = coefficient of X^i in prod_{v} (X + v.x)
    std::vector<XPoly> coeffs(n + 1, XPoly::zero(vars));
    coeffs[0] = XPoly::one(vars);
    std::uint32_t filled = 0;
    for (std::uint32_t v = 0; v < n; ++v) {
        XPoly lv = XPoly::linear_form(vars, v);
        // multiply by (X + lv)
        for (std::uint32_t i = filled + 2; i-- > 0;) {
            XPoly shifted = (i > 0) ? coeffs[i - 1] : XPoly::zero(vars);
            coeffs[i] = shifted.plus(coeffs[i].times(lv));
        }
        ++filled;
    }

    if (!(coeffs[n] == XPoly::one(vars)))
        throw std::logic_error("dickson_invariants: leading X-coefficient is not 1");
    for (std::uint32_t i = 0; i < n; ++i) {
        bool is_power_of_two_deg = (i != 0) && (i & (i - 1)) == 0;
        if (!is_power_of_two_deg && !coeffs[i].is_zero())
            throw std::logic_error("dickson_invariants: nonzero coefficient off the X^{2^s} grid");
    }

    DicksonAlgebra alg;
    alg.m = m;
    for (std::int32_t s = static_cast<std::int32_t>(m) - 1; s >= 0; --s) {
        XPoly q = coeffs[std::uint32_t(1) << s];
        const std::uint32_t expected = n - (std::uint32_t(1) << s);
        if (q.degree() != expected || !q.is_homogeneous())
            throw std::logic_error("dickson_invariants: q_{m,s} has the wrong degree");
        alg.invariants.push_back(std::move(q));
    }
    return alg;
}

std::vector<std::vector<std::uint32_t>> gl_matrices(std::uint32_t m) {
    std::vector<std::vector<std::uint32_t>> out;
    const std::uint32_t rows = std::uint32_t(1) << m;
    std::vector<std::uint32_t> mat(m);
    const std::uint64_t total = std::uint64_t(1) << (m * m);
    for (std::uint64_t code = 0; code < total; ++code) {
        std::uint64_t c = code;
        for (std::uint32_t i = 0; i < m; ++i) {
            mat[i] = static_cast<std::uint32_t>(c & (rows - 1));
            c >>= m;
        }
        // invertible iff rows reduce to full rank over F_2
        std::vector<std::uint32_t> work = mat;
        std::uint32_t rank = 0;
        for (std::uint32_t bit = 0; bit < m; ++bit) {
            std::uint32_t pivot = rank;
            while (pivot < m && !(work[pivot] >> bit & 1))
                ++pivot;
            if (pivot == m)
                continue;
            std::swap(work[rank], work[pivot]);
            for (std::uint32_t i = 0; i < m; ++i)
                if (i != rank && (work[i] >> bit & 1))
                    work[i] ^= work[rank];
            ++rank;
        }
        if (rank == m)
            out.push_back(mat);
    }
    return out;
}

bool is_gl_invariant(const XPoly& p, std::uint32_t m) {
    for (const auto& mat : gl_matrices(m))
        if (!(p.substituted(mat) == p))
            return false;
    return true;
}

bool verify_gl_invariance(const DicksonAlgebra& alg, bool allow_long_run) {
    if (alg.m >= 4 && !allow_long_run)
        throw std::invalid_argument(
            "verify_gl_invariance: m = 4 means 20160 matrices; pass allow_long_run to proceed");
    for (const XPoly& q : alg.invariants)
        if (!is_gl_invariant(q, alg.m))
            return false;
    return true;
}

} // namespace regskew::dickson
