#pragma once

#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace crossint {

using BigCount = boost::multiprecision::cpp_int;

/// C(n,k); zero when k < 0, k > n or n < 0.
BigCount binomial(int n, int k);

// |M^t(n,a,b)| by the partition over P subset B' and by inclusion-exclusion.
BigCount size_mt_partition(int n, int a, int b, int t);
BigCount size_mt_alternating(int n, int a, int b, int t);
/// Both forms; throws std::logic_error if they disagree.
BigCount size_mt(int n, int a, int b, int t);

/// |H^t(n,a,b)| = C(n,a) - sum_{i<t} C(b+t-1,i) C(n-b-t+1,a-i) + C(b+t-1,b).
BigCount size_ht(int n, int a, int b, int t);

/// |H_s^t(n,a,b)|, counting the F-part by the smallest element j of A in [s]:
/// sum_j [C(n-j,a-1) - sum_{i=0}^{t-2} C(b+t-j-1,i) C(n-b-t+1,a-1-i)]
///   + C(n-s,b-s) + C(b+t-1,b) - C(b+t-s-1,b-s).
BigCount size_hst(int n, int a, int b, int t, int s);
/// The same count with the inner sum running to t-j-1, as it is usually
/// printed. Only agrees with enumeration for s = 1; kept for reporting.
BigCount size_hst_printed(int n, int a, int b, int t, int s);

/// C(n,a) + sum_{i=1}^t (-1)^i C(t,i) C(n-ib,a) + t. Checked against size_mt.
BigCount bound_1t(int n, int a, int b, int t);
/// sum_{i=1}^s (C(n-i,a-1) + sum_{j=1}^{t-1} (-1)^j C(t-1,j) C(n-jb-i,a-1))
///   + C(n-s,b-s) + t - 1.
BigCount bound_st(int n, int a, int b, int t, int s);
/// C(n,b) - C(n-a,b) + 1.
BigCount bound_small_a(int n, int a, int b);

/// Largest intersecting k-families with tau >= 1, 2, 3.
BigCount m1(int n, int k);
BigCount m2(int n, int k);
BigCount bound_cover3(int n, int k);

struct SlackReport {
  std::string check;
  std::string params;
  BigCount lhs;
  BigCount rhs;
  BigCount slack;  // lhs - rhs
  bool equality_predicted = false;
  bool equality_observed = false;

  bool pass() const { return slack >= 0 && equality_predicted == equality_observed; }
};

// Each check throws std::invalid_argument outside its hypotheses.

/// C(n,q) - C(n-p,q) = sum_{i=1}^p C(n-i,q-1); needs 0 <= p <= n, q >= 0.
SlackReport check_identity_binomial(int n, int p, int q);
/// C(n-i,k) (n-i+1)^i >= (n-k-i+1)^i C(n,k); needs k >= 1, i >= 0, n >= k+i.
/// Equality exactly for i <= 1.
SlackReport check_cnie(int n, int k, int i);
/// C(n,a) - 2C(n-b,a) + C(n-2b,a) + 2 >= C(n,b); needs b >= 1, a >= b+2, n >= a+b.
SlackReport check_qlecnie2(int n, int a, int b);
/// Needs t >= 2, b >= 1, a >= b+t, n >= a+b. For n > a+b, b > 1 compares
/// C(n,a) + sum (-1)^i C(t,i) C(n-ib,a) with C(n,b). At n = a+b it checks
/// |M^t(a+b,a,b)| = C(a+b,a); for b = 1 it checks C(n-t,a-t) + t >= n.
SlackReport check_snsi(int n, int a, int b, int t);
/// |M^t| >= |H^t|; needs t >= 1, b >= 1, a >= t, n >= tb.
SlackReport check_icip1(int n, int a, int b, int t);
/// |H^t| - C(n,b) > 0; needs t >= 2, b >= 1, a >= b+t, n >= a+b.
SlackReport check_icile(int n, int a, int b, int t);

/// (floor(k!(e-1)), k^k), the floor computed as sum_{i=1}^k k!/i!.
std::pair<BigCount, BigCount> erdos_lovasz(int k);
BigCount fot_lower(int k);

}  // namespace crossint
