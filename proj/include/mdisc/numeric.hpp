#pragma once

// Exact scalar and dense matrix types shared across the library. All
// arithmetic is arbitrary-precision integer or rational; no floating point.

#include <Eigen/Core>
#include <boost/multiprecision/traits/is_byte_container.hpp>

// boost 1.74's byte-container probe is not SFINAE-safe against Eigen
// expression types (their const_iterator typedef can be void), which breaks
// Eigen's scalar-promotion convertibility queries. Opt Eigen types out.
namespace boost { namespace multiprecision { namespace detail {
template <class S, int R, int C, int O, int MR, int MC>
struct is_byte_container<Eigen::Matrix<S, R, C, O, MR, MC>> : public boost::false_type {};
template <class X>
struct is_byte_container<Eigen::Transpose<X>> : public boost::false_type {};
template <class X, int R, int C, bool P>
struct is_byte_container<Eigen::Block<X, R, C, P>> : public boost::false_type {};
template <class L, class R, int O>
struct is_byte_container<Eigen::Product<L, R, O>> : public boost::false_type {};
template <class Op, class L, class R>
struct is_byte_container<Eigen::CwiseBinaryOp<Op, L, R>> : public boost::false_type {};
template <class Op, class X>
struct is_byte_container<Eigen::CwiseUnaryOp<Op, X>> : public boost::false_type {};
}}}  // namespace boost::multiprecision::detail

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

#include <stdexcept>
#include <string>

namespace mdisc {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;
using Index = Eigen::Index;

using MatXi = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using VecXi = Eigen::Matrix<Int, Eigen::Dynamic, 1>;
using LatticePoint = Eigen::Matrix<Int, 2, 1>;

using boost::multiprecision::abs;
using boost::multiprecision::gcd;

inline int sign_of(const Int& x) { return x.sign(); }
inline int sign_of(const Rat& x) { return x.sign(); }

// boost's rational rejects negative denominators for unbounded integers, so
// normalize the sign before construction
inline Rat make_rat(Int num, Int den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rat(num, den);
}

inline LatticePoint lattice_point(long x, long y) {
  LatticePoint p;
  p << Int(x), Int(y);
  return p;
}

inline bool lex_less(const LatticePoint& a, const LatticePoint& b) {
  if (a(0) != b(0)) return a(0) < b(0);
  return a(1) < b(1);
}

inline bool points_equal(const LatticePoint& a, const LatticePoint& b) {
  return a(0) == b(0) && a(1) == b(1);
}

// cross product of (a - o) and (b - o); > 0 iff the turn o->a->b is ccw
inline Int cross(const LatticePoint& o, const LatticePoint& a, const LatticePoint& b) {
  return (a(0) - o(0)) * (b(1) - o(1)) - (a(1) - o(1)) * (b(0) - o(0));
}

inline Int cross(const LatticePoint& u, const LatticePoint& v) {
  return u(0) * v(1) - u(1) * v(0);
}

inline bool mat_equal(const MatXi& a, const MatXi& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

// error taxonomy surfaced through the CLI exit codes
struct InputError : std::runtime_error {
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};
struct SizeGateError : std::runtime_error {
  explicit SizeGateError(const std::string& what) : std::runtime_error(what) {}
};
struct GenericityError : std::runtime_error {
  explicit GenericityError(const std::string& what) : std::runtime_error(what) {}
};
struct StratumFitError : std::runtime_error {
  explicit StratumFitError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace mdisc
