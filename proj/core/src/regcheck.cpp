#include "regskew/regcheck.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

#include <Eigen/Dense>
#include <Eigen/SVD>

namespace regskew::regcheck {

namespace {

Rational rat(std::int64_t n, std::int64_t d = 1) { return Rational(Integer(n), Integer(d)); }

} // namespace

// ---------------------------------------------------------------- MapFamily

MapFamily MapFamily::real_moment(std::int64_t k) {
    if (k < 1)
        throw std::invalid_argument("real_moment: requires k >= 1");
    MapFamily f;
    f.kind_ = Kind::RealMoment;
    f.param_ = k;
    f.domain_dim_ = 1;
    f.target_dim_ = k;
    f.name_ = "real_moment(" + std::to_string(k) + ")";
    return f;
}

MapFamily MapFamily::complex_moment(std::int64_t k) {
    if (k < 1)
        throw std::invalid_argument("complex_moment: requires k >= 1");
    MapFamily f;
    f.kind_ = Kind::ComplexMoment;
    f.param_ = k;
    f.domain_dim_ = 2;
    f.target_dim_ = 2 * k - 1;
    f.name_ = "complex_moment(" + std::to_string(k) + ")";
    return f;
}

MapFamily MapFamily::sphere_lift(std::int64_t n) {
    if (n < 1)
        throw std::invalid_argument("sphere_lift: requires n >= 1");
    MapFamily f;
    f.kind_ = Kind::SphereLift;
    f.param_ = n;
    f.domain_dim_ = n;
    f.target_dim_ = n + 2;
    f.name_ = "sphere_lift(" + std::to_string(n) + ")";
    return f;
}

MapFamily MapFamily::affine_lift(MapFamily inner) {
    MapFamily f;
    f.kind_ = Kind::AffineLift;
    f.domain_dim_ = inner.domain_dim();
    f.target_dim_ = inner.target_dim() + 1;
    f.name_ = "affine_lift(" + inner.name() + ")";
    f.inner_ = std::make_shared<MapFamily>(std::move(inner));
    return f;
}

MapFamily MapFamily::custom(std::int64_t domain_dim, std::vector<std::vector<Rational>> rows,
                            std::string label) {
    if (domain_dim < 0)
        throw std::invalid_argument("custom: negative domain dimension");
    for (const auto& row : rows)
        if (row.size() != static_cast<std::size_t>(domain_dim) + 1)
            throw std::invalid_argument("custom: each row needs domain_dim + 1 coefficients");
    MapFamily f;
    f.kind_ = Kind::Custom;
    f.domain_dim_ = domain_dim;
    f.target_dim_ = static_cast<std::int64_t>(rows.size());
    f.rows_ = std::move(rows);
    f.name_ = label.empty() ? "custom(" + std::to_string(domain_dim) + "->" +
                                  std::to_string(f.target_dim_) + ")"
                            : std::move(label);
    return f;
}

MapFamily MapFamily::identity(std::int64_t n) {
    if (n < 1)
        throw std::invalid_argument("identity: requires n >= 1");
    std::vector<std::vector<Rational>> rows;
    for (std::int64_t i = 0; i < n; ++i) {
        std::vector<Rational> row(static_cast<std::size_t>(n) + 1, rat(0));
        row[static_cast<std::size_t>(i) + 1] = rat(1);
        rows.push_back(std::move(row));
    }
    return custom(n, std::move(rows), "identity(" + std::to_string(n) + ")");
}

MapFamily MapFamily::constant_one(std::int64_t n) {
    if (n < 1)
        throw std::invalid_argument("constant_one: requires n >= 1");
    std::vector<std::vector<Rational>> rows{
        std::vector<Rational>(static_cast<std::size_t>(n) + 1, rat(0))};
    rows[0][0] = rat(1);
    return custom(n, std::move(rows), "constant_one(" + std::to_string(n) + ")");
}

namespace {

MapFamily parse_at(const std::string& s, std::size_t& pos);

std::int64_t parse_int_arg(const std::string& s, std::size_t& pos) {
    std::size_t start = pos;
    while (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '-'))
        ++pos;
    if (start == pos)
        throw std::invalid_argument("MapFamily::parse: expected an integer in '" + s + "'");
    return std::stoll(s.substr(start, pos - start));
}

MapFamily parse_at(const std::string& s, std::size_t& pos) {
    std::size_t start = pos;
    while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
        ++pos;
    std::string head = s.substr(start, pos - start);
    if (pos >= s.size() || s[pos] != '(')
        throw std::invalid_argument("MapFamily::parse: expected '(' after '" + head + "'");
    ++pos;
    MapFamily out = [&]() -> MapFamily {
        if (head == "real_moment")
            return MapFamily::real_moment(parse_int_arg(s, pos));
        if (head == "complex_moment")
            return MapFamily::complex_moment(parse_int_arg(s, pos));
        if (head == "sphere_lift")
            return MapFamily::sphere_lift(parse_int_arg(s, pos));
        if (head == "identity")
            return MapFamily::identity(parse_int_arg(s, pos));
        if (head == "constant_one")
            return MapFamily::constant_one(parse_int_arg(s, pos));
        if (head == "affine_lift")
            return MapFamily::affine_lift(parse_at(s, pos));
        throw std::invalid_argument("MapFamily::parse: unknown family '" + head + "'");
    }();
    if (pos >= s.size() || s[pos] != ')')
        throw std::invalid_argument("MapFamily::parse: expected ')' in '" + s + "'");
    ++pos;
    return out;
}

} // namespace

MapFamily MapFamily::parse(const std::string& text) {
    std::size_t pos = 0;
    MapFamily f = parse_at(text, pos);
    if (pos != text.size())
        throw std::invalid_argument("MapFamily::parse: trailing characters in '" + text + "'");
    return f;
}

Point MapFamily::evaluate(const Point& point) const {
    if (point.size() != static_cast<std::size_t>(domain_dim_))
        throw std::invalid_argument("MapFamily::evaluate: point dimension mismatch");
    switch (kind_) {
    case Kind::RealMoment: {
        Point out;
        out.reserve(static_cast<std::size_t>(param_));
        Rational p = rat(1);
        for (std::int64_t i = 0; i < param_; ++i) {
            out.push_back(p);
            p *= point[0];
        }
        return out;
    }
    case Kind::ComplexMoment: {
        Point out;
        out.reserve(static_cast<std::size_t>(2 * param_ - 1));
        out.push_back(rat(1));
        Rational re = rat(1), im = rat(0);
        for (std::int64_t i = 1; i < param_; ++i) {
            Rational nre = re * point[0] - im * point[1];
            Rational nim = re * point[1] + im * point[0];
            re = nre;
            im = nim;
            out.push_back(re);
            out.push_back(im);
        }
        return out;
    }
    case Kind::SphereLift: {
        Rational s = rat(0);
        for (const Rational& x : point)
            s += x * x;
        Rational denom = s + 1;
        Point out;
        out.reserve(static_cast<std::size_t>(target_dim_));
        out.push_back(rat(1));
        for (const Rational& x : point)
            out.push_back(2 * x / denom);
        out.push_back((s - 1) / denom);
        return out;
    }
    case Kind::AffineLift: {
        Point inner = inner_->evaluate(point);
        Point out;
        out.reserve(inner.size() + 1);
        out.push_back(rat(1));
        out.insert(out.end(), inner.begin(), inner.end());
        return out;
    }
    case Kind::Custom: {
        Point out;
        out.reserve(rows_.size());
        for (const auto& row : rows_) {
            Rational v = row[0];
            for (std::size_t j = 0; j < point.size(); ++j)
                v += row[j + 1] * point[j];
            out.push_back(v);
        }
        return out;
    }
    }
    throw std::logic_error("MapFamily::evaluate: unreachable");
}

// ---------------------------------------------------------- linear algebra

namespace {

// Clear denominators row by row; scaling a row by a nonzero rational does not
// change rank or the vanishing of the determinant.
std::vector<std::vector<Integer>> cleared(const std::vector<std::vector<Rational>>& m,
                                          std::vector<Integer>* scales = nullptr) {
    std::vector<std::vector<Integer>> out;
    out.reserve(m.size());
    for (const auto& row : m) {
        Integer l = 1;
        for (const Rational& x : row)
            l = boost::multiprecision::lcm(l, Integer(boost::multiprecision::denominator(x)));
        std::vector<Integer> irow;
        irow.reserve(row.size());
        for (const Rational& x : row)
            irow.push_back(Integer(boost::multiprecision::numerator(x)) * (l / Integer(boost::multiprecision::denominator(x))));
        if (scales)
            scales->push_back(l);
        out.push_back(std::move(irow));
    }
    return out;
}

// Fraction-free Bareiss elimination; returns rank, and when det != nullptr
// (square input) also the exact determinant of the integer matrix.
std::int64_t bareiss(std::vector<std::vector<Integer>> a, Integer* det) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    Integer prev = 1;
    int sign = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && a[pivot][c] == 0)
            ++pivot;
        if (pivot == rows)
            continue;
        if (pivot != r) {
            std::swap(a[pivot], a[r]);
            sign = -sign;
        }
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j)
                a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / prev;
            a[i][c] = 0;
        }
        prev = a[r][c];
        ++r;
    }
    if (det) {
        if (rows != cols)
            throw std::invalid_argument("bareiss: determinant of a non-square matrix");
        *det = (r == rows) ? Integer(sign) * prev : Integer(0);
    }
    return static_cast<std::int64_t>(r);
}

} // namespace

std::int64_t rank_exact(const std::vector<std::vector<Rational>>& matrix) {
    if (matrix.empty())
        return 0;
    return bareiss(cleared(matrix), nullptr);
}

Rational det_exact(const std::vector<std::vector<Rational>>& matrix) {
    if (matrix.empty())
        return Rational(1);
    std::vector<Integer> scales;
    auto a = cleared(matrix, &scales);
    Integer det;
    bareiss(std::move(a), &det);
    Rational out(det);
    for (const Integer& s : scales)
        out /= Rational(s);
    return out;
}

std::int64_t rank_float(const std::vector<std::vector<Rational>>& matrix, double tolerance) {
    if (matrix.empty())
        return 0;
    Eigen::MatrixXd m(matrix.size(), matrix[0].size());
    for (std::size_t i = 0; i < matrix.size(); ++i)
        for (std::size_t j = 0; j < matrix[i].size(); ++j)
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                matrix[i][j].convert_to<double>();
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
    const auto& sv = svd.singularValues();
    double scale = sv.size() ? std::max(1.0, sv(0)) : 1.0;
    std::int64_t rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        if (sv(i) > tolerance * scale)
            ++rank;
    return rank;
}

// -------------------------------------------------------------- the checker

std::string to_string(RegVerdict v) {
    switch (v) {
    case RegVerdict::NoCounterexampleFound: return "NO_COUNTEREXAMPLE_FOUND";
    case RegVerdict::Counterexample: return "COUNTEREXAMPLE";
    case RegVerdict::AutomaticFailure: return "AUTOMATIC_FAILURE";
    }
    return "?";
}

namespace {

Rational sq_dist(const Point& a, const Point& b) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        Rational d = a[i] - b[i];
        s += d * d;
    }
    return s;
}

struct TupleSource {
    virtual ~TupleSource() = default;
    virtual bool next(std::vector<Point>& tuple) = 0;
};

struct RandomTuples final : TupleSource {
    RandomTuples(const RandomSampler& cfg, std::int64_t k, std::int64_t dim, bool exact_mode)
        : cfg_(cfg), k_(k), dim_(dim), exact_(exact_mode), gen_(cfg.seed) {}

    Rational random_coord() {
        std::int64_t span = 2 * cfg_.max_numerator + 1;
        std::int64_t num =
            static_cast<std::int64_t>(gen_() % static_cast<std::uint64_t>(span)) -
            cfg_.max_numerator;
        std::int64_t den =
            static_cast<std::int64_t>(gen_() % static_cast<std::uint64_t>(cfg_.max_denominator)) + 1;
        return rat(num, den);
    }

    bool acceptable(const std::vector<Point>& tuple) const {
        // float mode keeps tuples apart by 10^-6; exact mode only needs
        // distinctness
        static const Rational kFloatSep = rat(1, 1000000000000LL); // (10^-6)^2
        for (std::size_t i = 0; i < tuple.size(); ++i)
            for (std::size_t j = i + 1; j < tuple.size(); ++j) {
                Rational d = sq_dist(tuple[i], tuple[j]);
                if (exact_ ? (d == 0) : (d < kFloatSep))
                    return false;
            }
        return true;
    }

    bool next(std::vector<Point>& tuple) override {
        if (produced_ >= cfg_.trials)
            return false;
        for (int attempt = 0; attempt < 1000; ++attempt) {
            tuple.clear();
            for (std::int64_t i = 0; i < k_; ++i) {
                Point p;
                for (std::int64_t j = 0; j < dim_; ++j)
                    p.push_back(random_coord());
                tuple.push_back(std::move(p));
            }
            if (acceptable(tuple)) {
                ++produced_;
                return true;
            }
        }
        throw std::runtime_error("RandomTuples: could not sample a non-degenerate tuple");
    }

    RandomSampler cfg_;
    std::int64_t k_, dim_;
    bool exact_;
    std::mt19937_64 gen_;
    std::int64_t produced_ = 0;
};

struct GridTuples final : TupleSource {
    GridTuples(const GridSampler& cfg, std::int64_t k, std::int64_t dim) : k_(k) {
        if (cfg.axis_values.empty())
            throw std::invalid_argument("GridSampler: empty axis");
        // points = axis^dim in lexicographic order
        std::vector<std::size_t> idx(static_cast<std::size_t>(dim), 0);
        const std::size_t n = cfg.axis_values.size();
        while (true) {
            Point p;
            for (std::size_t j = 0; j < idx.size(); ++j)
                p.push_back(cfg.axis_values[idx[j]]);
            points_.push_back(std::move(p));
            std::size_t j = idx.size();
            while (j > 0 && ++idx[j - 1] == n) {
                idx[j - 1] = 0;
                --j;
            }
            if (j == 0)
                break;
        }
        if (static_cast<std::int64_t>(points_.size()) < k)
            throw std::invalid_argument("GridSampler: fewer grid points than k");
        comb_.resize(static_cast<std::size_t>(k));
        for (std::size_t i = 0; i < comb_.size(); ++i)
            comb_[i] = i;
        done_ = false;
    }

    bool next(std::vector<Point>& tuple) override {
        if (done_)
            return false;
        tuple.clear();
        for (std::size_t i : comb_)
            tuple.push_back(points_[i]);
        // advance the combination
        const std::size_t n = points_.size();
        const std::size_t k = comb_.size();
        std::size_t i = k;
        while (i > 0) {
            --i;
            if (comb_[i] != i + n - k) {
                ++comb_[i];
                for (std::size_t j = i + 1; j < k; ++j)
                    comb_[j] = comb_[j - 1] + 1;
                return true;
            }
        }
        done_ = true;
        return true;
    }

    std::int64_t k_;
    std::vector<Point> points_;
    std::vector<std::size_t> comb_;
    bool done_ = true;
};

} // namespace

RegularityReport check_k_regular(const MapFamily& family, std::int64_t k,
                                 const Sampler& sampler, const Arithmetic& arithmetic) {
    if (k < 1)
        throw std::invalid_argument("check_k_regular: requires k >= 1");

    RegularityReport report;
    report.k = k;
    const bool exact = std::holds_alternative<ExactArithmetic>(arithmetic);
    if (exact) {
        report.arithmetic = "EXACT_RATIONAL";
    } else {
        std::ostringstream os;
        os << "FLOAT(tolerance=" << std::get<FloatArithmetic>(arithmetic).tolerance << ")";
        report.arithmetic = os.str();
    }

    const bool automatic = k > family.target_dim();
    if (automatic) {
        report.verdict = RegVerdict::AutomaticFailure;
        report.notes.push_back("k exceeds the target dimension; rank can never reach k");
    }

    std::unique_ptr<TupleSource> source;
    if (const auto* rs = std::get_if<RandomSampler>(&sampler)) {
        report.seed = rs->seed;
        source = std::make_unique<RandomTuples>(*rs, k, family.domain_dim(), exact);
    } else {
        source = std::make_unique<GridTuples>(std::get<GridSampler>(sampler), k,
                                              family.domain_dim());
    }

    std::vector<Point> tuple;
    while (source->next(tuple)) {
        ++report.trials;
        for (std::size_t i = 0; i < tuple.size(); ++i)
            for (std::size_t j = i + 1; j < tuple.size(); ++j) {
                Rational d = sq_dist(tuple[i], tuple[j]);
                if (!report.min_separation_sq || d < *report.min_separation_sq)
                    report.min_separation_sq = d;
            }

        std::vector<std::vector<Rational>> values;
        values.reserve(tuple.size());
        for (const Point& p : tuple)
            values.push_back(family.evaluate(p));
        std::int64_t rank =
            exact ? rank_exact(values)
                  : rank_float(values, std::get<FloatArithmetic>(arithmetic).tolerance);
        if (rank < k)
            report.failures.push_back({tuple, rank, k - rank});
    }

    if (!automatic)
        report.verdict = report.failures.empty() ? RegVerdict::NoCounterexampleFound
                                                 : RegVerdict::Counterexample;
    return report;
}

RegularityReport check_affinely_regular(const MapFamily& family, std::int64_t k,
                                        const Sampler& sampler, const Arithmetic& arithmetic) {
    RegularityReport report =
        check_k_regular(MapFamily::affine_lift(family), k + 1, sampler, arithmetic);
    report.notes.insert(report.notes.begin(),
                        "affine " + std::to_string(k) + "-regularity checked as " +
                            std::to_string(k + 1) + "-regularity of the (1,f) lift");
    return report;
}

} // namespace regskew::regcheck
