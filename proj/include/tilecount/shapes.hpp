#ifndef TILECOUNT_SHAPES_HPP
#define TILECOUNT_SHAPES_HPP

#include <string>
#include <variant>
#include <vector>

#include "tilecount/exactnum.hpp"

namespace tilecount {

// Partition with weakly decreasing positive parts; stored without trailing
// zeros, so the empty partition has rows() == 0. All cell coordinates used
// in this project are 1-based.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    int rows() const { return static_cast<int>(parts_.size()); }
    int cols() const { return parts_.empty() ? 0 : parts_[0]; }
    int part(int i) const;  // 1-based, 0 beyond the last row
    long cell_count() const;
    bool contains(int i, int j) const;  // cell (i,j) of the Young diagram

    Partition conjugate() const;
    bool self_conjugate() const { return *this == conjugate(); }

    const std::vector<int>& parts() const { return parts_; }
    bool operator==(const Partition&) const = default;
    std::string str() const;

private:
    std::vector<int> parts_;
};

// Strictly decreasing positive parts. Row i of the shifted diagram occupies
// columns i .. i+part(i)-1.
class StrictPartition {
public:
    StrictPartition() = default;
    explicit StrictPartition(std::vector<int> parts);

    int rows() const { return static_cast<int>(parts_.size()); }
    int part(int i) const;
    long cell_count() const;
    bool contains_shifted(int i, int j) const;

    const std::vector<int>& parts() const { return parts_; }
    bool operator==(const StrictPartition&) const = default;
    std::string str() const;

private:
    std::vector<int> parts_;
};

int content(int i, int j);  // c(i,j) = j - i

// Self-conjugate partition obtained by gluing the reflected shifted diagram
// of lam along the main diagonal.
Partition double_shape(const StrictPartition& lam);

struct ShapeFamily {
    enum class Kind {
        rectangle,                 // a, b
        staircase,                 // a, b        -> (b, b-1, ..., b-a+1)
        shifted_staircase,         // n           -> (n, n-1, ..., 1)
        shifted_trapezoid,         // n, k        -> (n, n-2, ..., n-2(k-1))
        shifted_double_staircase,  // n, k        -> delta_n + delta_k
        arithmetic_progression,    // M, d, l     -> (M-d, M-2d, ..., M-ld)
        custom,                    // explicit parts
    };

    Kind kind;
    std::vector<long> params;
    bool custom_strict = false;  // for Kind::custom: treat parts as strict

    static ShapeFamily rectangle(long a, long b) { return {Kind::rectangle, {a, b}}; }
    static ShapeFamily staircase(long a, long b) { return {Kind::staircase, {a, b}}; }
    static ShapeFamily shifted_staircase(long n) { return {Kind::shifted_staircase, {n}}; }
    static ShapeFamily shifted_trapezoid(long n, long k) {
        return {Kind::shifted_trapezoid, {n, k}};
    }
    static ShapeFamily shifted_double_staircase(long n, long k) {
        return {Kind::shifted_double_staircase, {n, k}};
    }
    static ShapeFamily arithmetic_progression(long M, long d, long l) {
        return {Kind::arithmetic_progression, {M, d, l}};
    }
    static ShapeFamily custom(std::vector<long> parts, bool strict) {
        return {Kind::custom, std::move(parts), strict};
    }

    // CLI syntax: rect:a,b  stair:a,b  sstair:n  trap:n,k  sds:n,k
    //             ap:M,d,l  custom:p1,p2,...
    static ShapeFamily parse(const std::string& syntax, bool strict_custom = false);
    std::string str() const;
};

using Shape = std::variant<Partition, StrictPartition>;

// Throws parameter_error naming the violated constraint.
Shape make_shape(const ShapeFamily& f);

bool shape_is_shifted(const Shape& s);
long shape_cell_count(const Shape& s);
std::string shape_str(const Shape& s);

}  // namespace tilecount

#endif
