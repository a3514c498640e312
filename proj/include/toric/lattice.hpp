#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace toric {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// A point of N or M: exact integer coordinates, length = ambient rank.
using IntVec = std::vector<Int>;
// A point of N_R or M_R in exact rational coordinates.
using RatVec = std::vector<Rat>;

// Dense integer matrix, row major.
class IntMat {
public:
    IntMat() : rows_(0), cols_(0) {}
    IntMat(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols) {}

    static IntMat identity(int n);
    // Matrix whose columns are the given vectors.
    static IntMat from_columns(const std::vector<IntVec>& cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Int& operator()(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
    const Int& operator()(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }

    bool operator==(const IntMat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }
    bool operator<(const IntMat& o) const {
        if (rows_ != o.rows_) return rows_ < o.rows_;
        if (cols_ != o.cols_) return cols_ < o.cols_;
        return data_ < o.data_;
    }

    IntMat operator*(const IntMat& o) const;
    IntVec operator*(const IntVec& v) const;
    IntMat transpose() const;

    // Fraction-free determinant (Bareiss). Square matrices only.
    Int det() const;
    bool is_unimodular() const { Int d = det(); return d == 1 || d == -1; }
    // Exact inverse of a unimodular matrix; stays integral.
    IntMat unimodular_inverse() const;

private:
    int rows_, cols_;
    std::vector<Int> data_;
};

// Element of GL(n, Z) acting on N; the dual action on M is by inverse-transpose.
using UnimodularMap = IntMat;

// Smith normal form: U * A * V = S with S diagonal, d1 | d2 | ..., U and V unimodular.
struct SmithResult {
    IntMat U, S, V;
};

IntVec primitive(const IntVec& v);  // v / gcd(v); throws "zero ray" on 0
SmithResult smith_normal_form(const IntMat& A);
int rank(const IntMat& A);

// Basis of { x : A x = 0 } over the rationals. Empty result means kernel {0}.
std::vector<RatVec> rational_kernel(const IntMat& A);

// Basis of the common fixed space of all maps, i.e. of the intersection of
// ker(gamma - id) over the rationals.
std::vector<RatVec> fixed_subspace(const std::vector<UnimodularMap>& maps);

// Inverse-transpose; the action induced on the dual lattice.
UnimodularMap dual_map(const UnimodularMap& g);

// Small helpers shared across modules.
Int dot(const IntVec& a, const IntVec& b);
Rat dot(const RatVec& a, const IntVec& b);
IntVec neg(const IntVec& v);
std::string to_string(const IntVec& v);
std::string to_string(const RatVec& v);

// Solve B x = y for square nonsingular integer B over the rationals.
RatVec solve_rational(const IntMat& B, const RatVec& y);

}  // namespace toric
