#include "regskew/charclass.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

#include "regskew/dyadic.hpp"

namespace regskew {

using gf2::Gf2Poly;
using gf2::Monomial;

std::string to_string(Verdict v) {
    return v == Verdict::NonvanishingCertified ? "NONVANISHING_CERTIFIED" : "NOT_CERTIFIED";
}

std::string Certificate::to_text() const {
    std::ostringstream os;
    os << "verdict: " << to_string(verdict) << "\n";
    os << "witness: " << witness << "\n";
    if (r)
        os << "r: " << *r << "\n";
    if (s)
        os << "s: " << *s << "\n";
    for (const FactorCertificate& f : trace) {
        os << "factor " << f.count << ": target_degree=" << f.target_degree
           << " witness_exponent=" << f.witness_exponent
           << " witness=" << f.witness.str()
           << " certified=" << (f.certified ? "yes" : "no");
        if (f.lucas_coefficient)
            os << " lucas_coefficient=" << *f.lucas_coefficient;
        os << "\n";
    }
    for (const auto& [label, part] : parts) {
        os << "part " << label << ":\n";
        std::istringstream is(part.to_text());
        std::string line;
        while (std::getline(is, line))
            os << "  " << line << "\n";
    }
    return os.str();
}

Gf2Poly total_class(std::int64_t d, std::int64_t count, std::uint64_t multiplicity,
                    std::uint64_t truncation_degree) {
    if (d < 2)
        throw std::invalid_argument("total_class: requires d >= 2");
    if (count < 2 || !dyadic::is_power_of_two(static_cast<std::uint64_t>(count)))
        throw std::invalid_argument("total_class: count must be a power of 2, count >= 2");
    if (d == 2)
        multiplicity %= 2; // 2 xi_{R^2,l} is trivial
    const std::size_t g = static_cast<std::size_t>(count - 1);
    Gf2Poly base = Gf2Poly::one(g) + Gf2Poly::generator_sum(g);
    return gf2::pow_truncated(base, multiplicity, truncation_degree);
}

Gf2Poly total_class(const ClassQuery& q) {
    return total_class(q.d, q.count, q.multiplicity, q.target_degree);
}

Gf2Poly dual_class(std::int64_t d, std::int64_t count, std::uint64_t multiplicity,
                   std::uint64_t truncation_degree) {
    Gf2Poly total = total_class(d, count, multiplicity, truncation_degree);
    Gf2Poly inv = gf2::invert_series(total, truncation_degree);

    // Complement route: (1+u)^{2^T - m} equals the inverse of (1+u)^m once
    // 2^T clears the truncation window, since (1+u)^{2^T} = 1 + sum w_i^{2^T}
    // and every w_i^{2^T} is beyond it.
    std::uint64_t mult_eff = (d == 2) ? multiplicity % 2 : multiplicity;
    std::uint64_t two_t = std::bit_ceil(truncation_degree + mult_eff + 1);
    const std::size_t g = static_cast<std::size_t>(count - 1);
    Gf2Poly base = Gf2Poly::one(g) + Gf2Poly::generator_sum(g);
    Gf2Poly complement = gf2::pow_truncated(base, two_t - mult_eff, truncation_degree);
    if (!(inv == complement))
        throw std::logic_error("dual_class: geometric-series and 2-power complement routes disagree");
    return inv;
}

Gf2Poly dual_class(const ClassQuery& q) {
    return dual_class(q.d, q.count, q.multiplicity, q.target_degree);
}

namespace {

FactorCertificate trivial_factor() {
    FactorCertificate f;
    f.count = 1;
    f.target_degree = 0;
    f.witness_exponent = 0;
    f.certified = true;
    f.witness = Gf2Poly::one(0);
    return f;
}

// Dual-class component of multiplicity*xi_{R^d,f} at degree (f-1)*j, detected
// against the pure power w_{f-1}^j.
FactorCertificate certify_factor(std::int64_t d, std::int64_t f, std::uint64_t multiplicity,
                                 std::int64_t j) {
    FactorCertificate out;
    out.count = f;
    out.witness_exponent = j;
    out.target_degree = static_cast<std::uint64_t>(f - 1) * static_cast<std::uint64_t>(j);

    QuotientModel model(d, f);
    Gf2Poly dual = dual_class(d, f, multiplicity, out.target_degree);
    Gf2Poly component = gf2::graded_component(dual, out.target_degree);
    out.certified = detect_pure_power(component, j, model);

    const std::size_t g = static_cast<std::size_t>(f - 1);
    if (out.certified)
        out.witness = Gf2Poly::from_terms(
            g, {Monomial::generator(g, g, static_cast<std::uint16_t>(j))});
    else
        out.witness = Gf2Poly::zero(g);
    return out;
}

Certificate assemble(std::vector<FactorCertificate> trace) {
    Certificate c;
    bool all = true;
    std::string w;
    for (const FactorCertificate& f : trace) {
        all = all && f.certified;
        if (!w.empty())
            w += " x ";
        w += f.witness.str();
    }
    c.verdict = all ? Verdict::NonvanishingCertified : Verdict::NotCertified;
    c.witness = all ? w : "0";
    c.trace = std::move(trace);
    return c;
}

Certificate trivial_certificate() {
    Certificate c;
    c.verdict = Verdict::NonvanishingCertified;
    c.witness = "1";
    return c;
}

} // namespace

Certificate certify_regular(std::int64_t d, std::int64_t k) {
    if (d < 2)
        throw std::invalid_argument("certify_regular: requires d >= 2");
    if (k < 1)
        throw std::invalid_argument("certify_regular: requires k >= 1");
    if (k == 1)
        return trivial_certificate();

    std::vector<FactorCertificate> trace;
    for (std::uint32_t r : dyadic::DyadicProfile::of(static_cast<std::uint64_t>(k)).powers) {
        std::int64_t f = std::int64_t(1) << r;
        if (f == 1)
            trace.push_back(trivial_factor());
        else
            trace.push_back(certify_factor(d, f, 1, d - 1));
    }
    return assemble(std::move(trace));
}

Certificate certify_skew(std::int64_t d, std::int64_t l) {
    if (d < 1 || l < 1)
        throw std::invalid_argument("certify_skew: requires d >= 1 and l >= 1");
    if (d == 1 || l == 1)
        return trivial_certificate();

    const std::int64_t j =
        (std::int64_t(1) << dyadic::gamma(static_cast<std::uint64_t>(d))) - d - 1;
    std::vector<FactorCertificate> trace;
    for (std::uint32_t r : dyadic::DyadicProfile::of(static_cast<std::uint64_t>(l)).powers) {
        std::int64_t f = std::int64_t(1) << r;
        if (f == 1) {
            trace.push_back(trivial_factor());
            continue;
        }
        FactorCertificate fc = certify_factor(d, f, static_cast<std::uint64_t>(d + 1), j);
        if (f >= 4) {
            // Coefficient of the pure power via Lucas, from the presentation
            // of the dual class as a (2^gamma2(d,f)-d-1)st power.
            std::uint64_t e = (std::uint64_t(1) << dyadic::gamma2(static_cast<std::uint64_t>(d),
                                                                  static_cast<std::uint64_t>(f))) -
                              static_cast<std::uint64_t>(d) - 1;
            fc.lucas_coefficient = dyadic::binom_mod2(e, static_cast<std::uint64_t>(j));
        }
        trace.push_back(std::move(fc));
    }
    return assemble(std::move(trace));
}

Certificate certify_regular_skew(std::int64_t d, std::int64_t k, std::int64_t l) {
    if (d < 2 || k < 2 || l < 2)
        throw std::invalid_argument("certify_regular_skew: requires d, k, l >= 2");
    Certificate reg = certify_regular(d, k);
    Certificate skw = certify_skew(d, l);

    Certificate c;
    c.verdict = (reg.certified() && skw.certified()) ? Verdict::NonvanishingCertified
                                                     : Verdict::NotCertified;
    c.witness = c.certified() ? reg.witness + " x " + skw.witness : "0";
    c.r = (d - 1) * (k - dyadic::alpha(static_cast<std::uint64_t>(k)));
    c.s = ((std::int64_t(1) << dyadic::gamma(static_cast<std::uint64_t>(d))) - d - 1) *
          (l - dyadic::alpha(static_cast<std::uint64_t>(l)));
    c.parts.emplace_back("regular", std::move(reg));
    c.parts.emplace_back("skew", std::move(skw));
    return c;
}

namespace {

void enumerate_audit(const std::vector<std::uint32_t>& indices, std::size_t pos,
                     std::int64_t remaining, std::int64_t d, std::int64_t k,
                     std::vector<std::uint32_t>& current, std::vector<AuditEntry>& out) {
    if (pos == indices.size()) {
        if (remaining != 0)
            return;
        AuditEntry e;
        e.exponents.assign(static_cast<std::size_t>(k - 1), 0);
        std::vector<std::uint64_t> parts;
        for (std::size_t t = 0; t < indices.size(); ++t) {
            e.exponents[indices[t] - 1] = current[t];
            if (current[t] > 0)
                parts.push_back(current[t]);
        }
        e.parity = dyadic::multinom_mod2(std::span<const std::uint64_t>(parts));
        out.push_back(std::move(e));
        return;
    }
    const std::int64_t idx = indices[pos];
    std::int64_t max_j = remaining / idx;
    if (idx == k - 1)
        max_j = std::min<std::int64_t>(max_j, d - 2);
    for (std::int64_t jv = 0; jv <= max_j; ++jv) {
        current[pos] = static_cast<std::uint32_t>(jv);
        enumerate_audit(indices, pos + 1, remaining - idx * jv, d, k, current, out);
    }
    current[pos] = 0;
}

} // namespace

std::vector<AuditEntry> chisholm_coefficient_audit(std::int64_t d, std::int64_t k) {
    if (d < 2 || !dyadic::is_power_of_two(static_cast<std::uint64_t>(d)))
        throw std::invalid_argument("chisholm_coefficient_audit: d must be a power of 2, d >= 2");
    if (k < 2 || !dyadic::is_power_of_two(static_cast<std::uint64_t>(k)))
        throw std::invalid_argument("chisholm_coefficient_audit: k must be a power of 2, k >= 2");

    const std::uint32_t m = dyadic::gamma(static_cast<std::uint64_t>(k)) - 1; // k = 2^m
    std::vector<std::uint32_t> indices; // ascending: 2^m - 2^{m-1}, ..., 2^m - 1
    for (std::int64_t s = m - 1; s >= 0; --s)
        indices.push_back(static_cast<std::uint32_t>(k - (std::int64_t(1) << s)));

    std::vector<AuditEntry> out;
    std::vector<std::uint32_t> current(indices.size(), 0);
    enumerate_audit(indices, 0, (d - 1) * (k - 1), d, k, current, out);

    for (const AuditEntry& e : out)
        if (e.parity != 0) {
            std::ostringstream os;
            os << "chisholm_coefficient_audit: odd coefficient at (";
            for (std::size_t i = 0; i < e.exponents.size(); ++i)
                os << (i ? "," : "") << e.exponents[i];
            os << ")";
            throw std::logic_error(os.str());
        }
    return out;
}

} // namespace regskew
