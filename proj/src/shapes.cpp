#include "tilecount/shapes.hpp"

#include <algorithm>
#include <sstream>

namespace tilecount {

namespace {

std::string parts_str(const std::vector<int>& p) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < p.size(); ++i) {
        if (i) os << ",";
        os << p[i];
    }
    os << ")";
    return os.str();
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw parameter_error("Partition: parts must be positive");
        if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
            throw parameter_error("Partition: parts must be weakly decreasing");
    }
}

int Partition::part(int i) const {
    if (i < 1 || i > rows()) return 0;
    return parts_[static_cast<size_t>(i - 1)];
}

long Partition::cell_count() const {
    long n = 0;
    for (int p : parts_) n += p;
    return n;
}

bool Partition::contains(int i, int j) const {
    return i >= 1 && j >= 1 && j <= part(i);
}

Partition Partition::conjugate() const {
    std::vector<int> c(static_cast<size_t>(cols()), 0);
    for (int p : parts_)
        for (int j = 0; j < p; ++j) c[static_cast<size_t>(j)]++;
    return Partition(std::move(c));
}

std::string Partition::str() const { return parts_str(parts_); }

StrictPartition::StrictPartition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw parameter_error("StrictPartition: parts must be positive");
        if (i + 1 < parts_.size() && parts_[i] <= parts_[i + 1])
            throw parameter_error("StrictPartition: parts must be strictly decreasing");
    }
}

int StrictPartition::part(int i) const {
    if (i < 1 || i > rows()) return 0;
    return parts_[static_cast<size_t>(i - 1)];
}

long StrictPartition::cell_count() const {
    long n = 0;
    for (int p : parts_) n += p;
    return n;
}

bool StrictPartition::contains_shifted(int i, int j) const {
    return i >= 1 && i <= rows() && j >= i && j <= i + part(i) - 1;
}

std::string StrictPartition::str() const { return parts_str(parts_); }

int content(int i, int j) { return j - i; }

Partition double_shape(const StrictPartition& lam) {
    if (lam.rows() == 0) return Partition();
    int n = lam.part(1) + lam.rows();  // safe bound on rows/cols of the double
    std::vector<int> rowlen(static_cast<size_t>(n), 0);
    for (int i = 1; i <= lam.rows(); ++i) {
        for (int j = i; j <= i + lam.part(i) - 1; ++j) {
            rowlen[static_cast<size_t>(i - 1)] =
                std::max(rowlen[static_cast<size_t>(i - 1)], j);
            if (j != i)  // reflected cell (j,i)
                rowlen[static_cast<size_t>(j - 1)] =
                    std::max(rowlen[static_cast<size_t>(j - 1)], i);
        }
    }
    // rows of a Young diagram are intervals starting at column 1, so the
    // maximal occupied column is the row length
    return Partition(std::move(rowlen));
}

Shape make_shape(const ShapeFamily& f) {
    using Kind = ShapeFamily::Kind;
    const auto& p = f.params;
    auto need = [&](size_t n, const char* what) {
        if (p.size() != n)
            throw parameter_error(std::string("make_shape: ") + what);
    };
    switch (f.kind) {
    case Kind::rectangle: {
        need(2, "rectangle requires parameters a,b");
        long a = p[0], b = p[1];
        if (a < 0 || b < 0) throw parameter_error("make_shape: rectangle needs a,b >= 0");
        std::vector<int> parts;
        if (b > 0) parts.assign(static_cast<size_t>(a), static_cast<int>(b));
        return Partition(std::move(parts));
    }
    case Kind::staircase: {
        need(2, "staircase requires parameters a,b");
        long a = p[0], b = p[1];
        if (a < 1 || a > b)
            throw parameter_error("make_shape: staircase needs 1 <= a <= b");
        std::vector<int> parts;
        for (long i = 0; i < a; ++i) parts.push_back(static_cast<int>(b - i));
        return Partition(std::move(parts));
    }
    case Kind::shifted_staircase: {
        need(1, "shifted staircase requires parameter n");
        long n = p[0];
        if (n < 0) throw parameter_error("make_shape: shifted staircase needs n >= 0");
        std::vector<int> parts;
        for (long i = n; i >= 1; --i) parts.push_back(static_cast<int>(i));
        return StrictPartition(std::move(parts));
    }
    case Kind::shifted_trapezoid: {
        need(2, "shifted trapezoid requires parameters n,k");
        long n = p[0], k = p[1];
        if (k < 1 || n - 2 * (k - 1) < 1)
            throw parameter_error(
                "make_shape: shifted trapezoid needs 1 <= k and n-2(k-1) >= 1");
        std::vector<int> parts;
        for (long i = 0; i < k; ++i) parts.push_back(static_cast<int>(n - 2 * i));
        return StrictPartition(std::move(parts));
    }
    case Kind::shifted_double_staircase: {
        need(2, "shifted double staircase requires parameters n,k");
        long n = p[0], k = p[1];
        if (n < 0 || k < 0 || k > n)
            throw parameter_error("make_shape: shifted double staircase needs 0 <= k <= n");
        std::vector<int> parts;
        for (long i = 1; i <= n; ++i) {
            long v = (n + 1 - i) + (i <= k ? (k + 1 - i) : 0);
            parts.push_back(static_cast<int>(v));
        }
        return StrictPartition(std::move(parts));
    }
    case Kind::arithmetic_progression: {
        need(3, "arithmetic progression requires parameters M,d,l");
        long M = p[0], d = p[1], l = p[2];
        if (l < 1 || d < 0 || M - l * d < 1)
            throw parameter_error(
                "make_shape: arithmetic progression needs l >= 1, d >= 0, M-l*d >= 1");
        std::vector<int> parts;
        for (long i = 1; i <= l; ++i) parts.push_back(static_cast<int>(M - i * d));
        return Partition(std::move(parts));
    }
    case Kind::custom: {
        std::vector<int> parts(p.begin(), p.end());
        if (f.custom_strict) return StrictPartition(std::move(parts));
        return Partition(std::move(parts));
    }
    }
    throw parameter_error("make_shape: unknown family");
}

ShapeFamily ShapeFamily::parse(const std::string& syntax, bool strict_custom) {
    auto colon = syntax.find(':');
    if (colon == std::string::npos)
        throw parameter_error("shape syntax: expected '<family>:<params>' in " + syntax);
    std::string name = syntax.substr(0, colon);
    std::vector<long> params;
    {
        std::string rest = syntax.substr(colon + 1);
        std::istringstream is(rest);
        std::string tok;
        while (std::getline(is, tok, ',')) {
            try {
                size_t pos = 0;
                long v = std::stol(tok, &pos);
                if (pos != tok.size()) throw std::invalid_argument(tok);
                params.push_back(v);
            } catch (const std::exception&) {
                throw parameter_error("shape syntax: bad integer '" + tok + "' in " + syntax);
            }
        }
    }
    auto mk = [&](Kind k, size_t n) {
        if (params.size() != n)
            throw parameter_error("shape syntax: wrong parameter count in " + syntax);
        return ShapeFamily{k, params};
    };
    if (name == "rect") return mk(Kind::rectangle, 2);
    if (name == "stair") return mk(Kind::staircase, 2);
    if (name == "sstair") return mk(Kind::shifted_staircase, 1);
    if (name == "trap") return mk(Kind::shifted_trapezoid, 2);
    if (name == "sds") return mk(Kind::shifted_double_staircase, 2);
    if (name == "ap") return mk(Kind::arithmetic_progression, 3);
    if (name == "custom") {
        if (params.empty())
            throw parameter_error("shape syntax: custom needs at least one part");
        return ShapeFamily::custom(params, strict_custom);
    }
    throw parameter_error("shape syntax: unknown family '" + name + "'");
}

std::string ShapeFamily::str() const {
    using Kind = ShapeFamily::Kind;
    std::string name;
    switch (kind) {
    case Kind::rectangle: name = "rect"; break;
    case Kind::staircase: name = "stair"; break;
    case Kind::shifted_staircase: name = "sstair"; break;
    case Kind::shifted_trapezoid: name = "trap"; break;
    case Kind::shifted_double_staircase: name = "sds"; break;
    case Kind::arithmetic_progression: name = "ap"; break;
    case Kind::custom: name = "custom"; break;
    }
    std::ostringstream os;
    os << name << ":";
    for (size_t i = 0; i < params.size(); ++i) {
        if (i) os << ",";
        os << params[i];
    }
    return os.str();
}

bool shape_is_shifted(const Shape& s) {
    return std::holds_alternative<StrictPartition>(s);
}

long shape_cell_count(const Shape& s) {
    return std::visit([](const auto& p) { return p.cell_count(); }, s);
}

std::string shape_str(const Shape& s) {
    return std::visit([](const auto& p) { return p.str(); }, s);
}

}  // namespace tilecount
