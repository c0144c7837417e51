#pragma once

#include <initializer_list>
#include <json.hpp>

#include "torkit/laurent.hpp"
#include "torkit/pclass.hpp"
#include "torkit/witt.hpp"

namespace cli {

using json = nlohmann::json;
using namespace torkit;

// Rejects keys outside `allowed`; `what` names the object in messages.
void check_keys(const json& j, std::initializer_list<const char*> allowed, const std::string& what);
const json& field(const json& j, const char* key, const std::string& what);

Int to_int(const json& j, const std::string& what);
long to_long(const json& j, const std::string& what, long lo, long hi);
Rat to_rat(const json& j, const std::string& what);
IVec to_ivec(const json& j, const std::string& what, size_t len = 0);
QVec to_qvec(const json& j, const std::string& what, size_t len = 0);
// All rows share one length, returned through `len` when it is 0 on entry.
IMat to_imat(const json& j, const std::string& what, size_t& len);
QMat to_qmat(const json& j, const std::string& what, size_t& len);

// {"generators": [...]} or {"rays": [...], "lattice": [...]} for C ∩ L.
AffineMonoid to_monoid(const json& j, const std::string& what);
// A constant tail or {"prefix": [...], "tail": c}.
CSeq to_cseq(const json& j, const std::string& what);
// {"n": n, "entries": [[[{"exp": e, "coef": q}, ...], ...], ...]}
LaurentMatrix to_laurent(const json& j, const std::string& what);
// [[entry, entry], [entry, entry]] with entry = [{"mono": [...], "coef": q}, ...]
MonoMatrix to_mono_matrix(const json& j, size_t r, const std::string& what);
// "1-2T+T^3" or {"m": m, "coeffs": [...]}
WittVector to_witt(const json& j, size_t m, const std::string& what);

json out(const Int& z);
json out(const Rat& q);
json out(const IVec& v);
json out(const QVec& v);
json out(const IMat& m);
json out(const QMat& m);
json out(const LaurentMatrix& m);
json out(const MonoMatrix& m);
json out(const WittVector& f);
json out(const Report& r);
json out_monoid(const AffineMonoid& m);

}  // namespace cli
