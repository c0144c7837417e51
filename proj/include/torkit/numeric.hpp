#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace torkit {

using Int = mpz_class;
using Rat = mpq_class;
using IVec = std::vector<Int>;
using QVec = std::vector<Rat>;
using IMat = std::vector<IVec>;
using QMat = std::vector<QVec>;

// Raised when an operation's precondition fails on otherwise well-formed input.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised for malformed input (bad literals, rank mismatches).
struct InputError : Error {
    using Error::Error;
};

Rat parse_rat(const std::string& s);
std::string str(const Rat& q);
std::string str(const Int& z);
std::string str(const IVec& v);
std::string str(const QVec& v);

QVec to_q(const IVec& v);
QMat to_q(const IMat& m);

// Integer multiple of v with coprime entries on the same ray; zero stays zero.
IVec primitive(const IVec& v);
IVec primitive(const QVec& v);
// Least positive integer d with d*v integral.
Int denominator_lcm(const QVec& v);
bool is_integral(const QVec& v);
IVec to_int(const QVec& v);  // throws if not integral
bool is_zero(const IVec& v);
bool is_zero(const QVec& v);

Int dot(const IVec& a, const IVec& b);
Rat dot(const QVec& a, const QVec& b);
Rat dot(const IVec& a, const QVec& b);

IVec add(const IVec& a, const IVec& b);
IVec sub(const IVec& a, const IVec& b);
IVec scale(const IVec& a, const Int& c);
IVec neg(const IVec& a);
QVec add(const QVec& a, const QVec& b);
QVec sub(const QVec& a, const QVec& b);
QVec scale(const QVec& a, const Rat& c);

Int gcd_all(const IVec& v);
int sgn(const Rat& q);
int sgn(const Int& z);

// x*M for a row vector x.
IVec row_times(const IVec& x, const IMat& m, size_t cols);
QVec row_times(const QVec& x, const QMat& m, size_t cols);

IMat transpose(const IMat& m, size_t cols);
QMat transpose(const QMat& m, size_t cols);

}  // namespace torkit
