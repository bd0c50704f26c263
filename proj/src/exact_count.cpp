#include "crossint/exact_count.hpp"

#include <stdexcept>
#include <string>

namespace crossint {
namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

int sign(int i) { return i % 2 ? -1 : 1; }

BigCount power(BigCount base, int e) {
  BigCount r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

std::string p3(int n, int a, int b) {
  return "n=" + std::to_string(n) + ",a=" + std::to_string(a) + ",b=" + std::to_string(b);
}
std::string p4(int n, int a, int b, int t) { return p3(n, a, b) + ",t=" + std::to_string(t); }

SlackReport make_report(std::string check, std::string params, BigCount lhs, BigCount rhs,
                        bool predicted) {
  SlackReport r{std::move(check), std::move(params), std::move(lhs), std::move(rhs), 0, predicted,
                false};
  r.slack = r.lhs - r.rhs;
  r.equality_observed = r.slack == 0;
  return r;
}

}  // namespace

BigCount binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigCount r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

BigCount size_mt_partition(int n, int a, int b, int t) {
  BigCount total = binomial(n - t, a - t);
  for (int l = 1; l <= t; ++l) {
    BigCount slice = binomial(n - t, a - t + l);
    for (int i = 1; i <= l; ++i)
      slice += sign(i) * binomial(l, i) * binomial(n - t - i * (b - 1), a - t + l);
    total += binomial(t, l) * slice;
  }
  return total + t;
}

BigCount size_mt_alternating(int n, int a, int b, int t) {
  BigCount total = binomial(n, a);
  for (int i = 1; i <= t; ++i) total += sign(i) * binomial(t, i) * binomial(n - i * b, a);
  return total + t;
}

BigCount size_mt(int n, int a, int b, int t) {
  require(n >= 0 && a >= 0 && b >= 0 && t >= 0, "size_mt: parameters must be nonnegative");
  BigCount x = size_mt_partition(n, a, b, t);
  BigCount y = size_mt_alternating(n, a, b, t);
  if (x != y)
    throw std::logic_error("size_mt: closed forms disagree at " + p4(n, a, b, t) + ": " +
                           x.str() + " vs " + y.str());
  return x;
}

BigCount size_ht(int n, int a, int b, int t) {
  require(n >= 0 && a >= 0 && b >= 0 && t >= 1, "size_ht: need t >= 1, others nonnegative");
  const int p = b + t - 1;
  BigCount total = binomial(n, a);
  for (int i = 0; i <= t - 1; ++i) total -= binomial(p, i) * binomial(n - p, a - i);
  return total + binomial(p, b);
}

namespace {

BigCount hst_impl(int n, int a, int b, int t, int s, bool printed) {
  require(n >= 0 && a >= 1 && b >= 1 && t >= 1 && s >= 1 && s <= b,
          "size_hst: need a, b, t >= 1 and 1 <= s <= b");
  const int p = b + t - 1;
  BigCount total = 0;
  for (int j = 1; j <= s; ++j) {
    BigCount part = binomial(n - j, a - 1);
    const int top = printed ? t - j - 1 : t - 2;
    for (int i = 0; i <= top; ++i) part -= binomial(p - j, i) * binomial(n - p, a - i - 1);
    total += part;
  }
  return total + binomial(n - s, b - s) + binomial(p, b) - binomial(p - s, b - s);
}

}  // namespace

BigCount size_hst(int n, int a, int b, int t, int s) { return hst_impl(n, a, b, t, s, false); }

BigCount size_hst_printed(int n, int a, int b, int t, int s) {
  return hst_impl(n, a, b, t, s, true);
}

BigCount bound_1t(int n, int a, int b, int t) {
  BigCount v = binomial(n, a);
  for (int i = 1; i <= t; ++i) v += sign(i) * binomial(t, i) * binomial(n - i * b, a);
  v += t;
  if (v != size_mt(n, a, b, t))
    throw std::logic_error("bound_1t differs from |M^t| at " + p4(n, a, b, t));
  return v;
}

BigCount bound_st(int n, int a, int b, int t, int s) {
  require(n >= 0 && a >= 1 && b >= 1 && t >= 1 && s >= 1, "bound_st: need a, b, t, s >= 1");
  BigCount total = 0;
  for (int i = 1; i <= s; ++i) {
    BigCount part = binomial(n - i, a - 1);
    for (int j = 1; j <= t - 1; ++j)
      part += sign(j) * binomial(t - 1, j) * binomial(n - j * b - i, a - 1);
    total += part;
  }
  return total + binomial(n - s, b - s) + (t - 1);
}

BigCount bound_small_a(int n, int a, int b) {
  return binomial(n, b) - binomial(n - a, b) + 1;
}

BigCount m1(int n, int k) { return binomial(n - 1, k - 1); }

BigCount m2(int n, int k) { return binomial(n - 1, k - 1) - binomial(n - k - 1, k - 1) + 1; }

BigCount bound_cover3(int n, int k) {
  return binomial(n - 1, k - 1) - binomial(n - k, k - 1) - binomial(n - k - 1, k - 1) +
         binomial(n - 2 * k, k - 1) + binomial(n - k - 2, k - 3) + 3;
}

SlackReport check_identity_binomial(int n, int p, int q) {
  require(p >= 0 && p <= n && q >= 0, "identity: need 0 <= p <= n, q >= 0");
  BigCount rhs = 0;
  for (int i = 1; i <= p; ++i) rhs += binomial(n - i, q - 1);
  return make_report("identity",
                     "n=" + std::to_string(n) + ",p=" + std::to_string(p) + ",q=" + std::to_string(q),
                     binomial(n, q) - binomial(n - p, q), rhs, true);
}

SlackReport check_cnie(int n, int k, int i) {
  require(k >= 1 && i >= 0 && n >= k + i, "cnie: need k >= 1, i >= 0, n >= k + i");
  // Both sides multiplied by (n-i+1)^i > 0.
  BigCount lhs = binomial(n - i, k) * power(n - i + 1, i);
  BigCount rhs = power(n - k - i + 1, i) * binomial(n, k);
  return make_report("cnie",
                     "n=" + std::to_string(n) + ",k=" + std::to_string(k) + ",i=" + std::to_string(i),
                     lhs, rhs, i <= 1);
}

SlackReport check_qlecnie2(int n, int a, int b) {
  require(b >= 1 && a >= b + 2 && n >= a + b, "qlecnie2: need b >= 1, a >= b + 2, n >= a + b");
  BigCount lhs = binomial(n, a) - 2 * binomial(n - b, a) + binomial(n - 2 * b, a) + 2;
  return make_report("qlecnie2", p3(n, a, b), lhs, binomial(n, b),
                     n == a + b || (b == 1 && a == 3));
}

SlackReport check_snsi(int n, int a, int b, int t) {
  require(t >= 2 && b >= 1 && a >= b + t && n >= a + b,
          "snsi: need t >= 2, b >= 1, a >= b + t, n >= a + b");
  if (n == a + b)
    return make_report("snsi", p4(n, a, b, t), size_mt(n, a, b, t), binomial(a + b, a), true);
  if (b == 1)
    return make_report("snsi", p4(n, a, b, t), binomial(n - t, a - t) + t, n, a == t + 1);
  BigCount lhs = binomial(n, a);
  for (int i = 1; i <= t; ++i) lhs += sign(i) * binomial(t, i) * binomial(n - i * b, a);
  return make_report("snsi", p4(n, a, b, t), lhs, binomial(n, b), false);
}

SlackReport check_icip1(int n, int a, int b, int t) {
  require(t >= 1 && b >= 1 && a >= t && n >= t * b, "icip1: need t, b >= 1, a >= t, n >= tb");
  return make_report("icip1", p4(n, a, b, t), size_mt(n, a, b, t), size_ht(n, a, b, t),
                     n == a + b || b == 1);
}

SlackReport check_icile(int n, int a, int b, int t) {
  require(t >= 2 && b >= 1 && a >= b + t && n >= a + b,
          "icile: need t >= 2, b >= 1, a >= b + t, n >= a + b");
  return make_report("icile", p4(n, a, b, t), size_ht(n, a, b, t), binomial(n, b), false);
}

std::pair<BigCount, BigCount> erdos_lovasz(int k) {
  require(k >= 1, "erdos_lovasz: need k >= 1");
  // k!/i! summed for i = k down to 1.
  BigCount lower = 0, term = 1;
  for (int i = k; i >= 1; --i) {
    lower += term;
    term *= i;
  }
  return {lower, power(k, k)};
}

BigCount fot_lower(int k) {
  require(k >= 1, "fot_lower: need k >= 1");
  if (k % 2 == 0) return power(k / 2 + 1, k - 1);
  return power((k + 3) / 2, (k - 1) / 2) * power((k + 1) / 2, (k - 1) / 2);
}

}  // namespace crossint
