#include "qortho/interlace.hpp"

#include "qortho/error.hpp"

namespace qortho {

namespace {

struct Named {
  const RootSet* set;
  const char* name;
};

class Checker {
 public:
  explicit Checker(Pattern expected) { verdict_.expected = expected; }

  void less(Named l, int i, Named r, int j) {
    const bool ok = compare_roots(*l.set, static_cast<std::size_t>(i), *r.set, static_cast<std::size_t>(j)) < 0;
    verdict_.witness.push_back({l.name, i, r.name, j, ok});
    if (!ok && verdict_.details.empty()) {
      verdict_.details = std::string(l.name) + "[" + std::to_string(i) + "] < " + r.name + "[" +
                         std::to_string(j) + "] fails";
    }
  }

  InterlaceVerdict finish() {
    bool all = verdict_.details.empty();
    verdict_.pattern = all ? verdict_.expected : Pattern::Fail;
    return std::move(verdict_);
  }

  InterlaceVerdict size_mismatch(const std::string& what) {
    verdict_.details = what;
    verdict_.pattern = Pattern::Fail;
    return std::move(verdict_);
  }

 private:
  InterlaceVerdict verdict_;
};

}  // namespace

std::string_view to_string(Pattern p) noexcept {
  switch (p) {
    case Pattern::AlternateSameDegree: return "alternate-same-degree";
    case Pattern::AlternateDegreeDrop: return "alternate-degree-drop";
    case Pattern::CaseC_i: return "case-c-i";
    case Pattern::CaseC_ii: return "case-c-ii";
    case Pattern::Fail: return "fail";
  }
  return "unknown";
}

InterlaceVerdict interlace(const RootSet& a, const RootSet& b, Pattern expected) {
  Checker check(expected);
  const int n = static_cast<int>(a.size());
  const int m = static_cast<int>(b.size());
  const Named A{&a, "A"};
  const Named B{&b, "B"};
  switch (expected) {
    case Pattern::AlternateSameDegree:
      if (m != n || n == 0) return check.size_mismatch("needs equally many roots, got " + std::to_string(n) + " and " + std::to_string(m));
      for (int i = 0; i < n; ++i) {
        check.less(A, i, B, i);
        if (i + 1 < n) check.less(B, i, A, i + 1);
      }
      break;
    case Pattern::AlternateDegreeDrop:
      if (m != n - 1 || n == 0) return check.size_mismatch("needs one root fewer in B, got " + std::to_string(n) + " and " + std::to_string(m));
      for (int i = 0; i < m; ++i) {
        check.less(A, i, B, i);
        check.less(B, i, A, i + 1);
      }
      break;
    default:
      throw Error(ErrorKind::Mode, std::string(to_string(expected)) + " compares three root sets");
  }
  return check.finish();
}

InterlaceVerdict interlace(const RootSet& z, const RootSet& x, const RootSet& xp, Pattern expected) {
  Checker check(expected);
  const int n = static_cast<int>(z.size());
  if (n == 0 || static_cast<int>(x.size()) != n || static_cast<int>(xp.size()) != n - 1) {
    return check.size_mismatch("needs n, n and n-1 roots, got " + std::to_string(z.size()) + ", " +
                               std::to_string(x.size()) + " and " + std::to_string(xp.size()));
  }
  const Named Z{&z, "Z"};
  const Named X{&x, "X"};
  const Named XP{&xp, "X'"};
  switch (expected) {
    case Pattern::CaseC_i:
      for (int i = 0; i < n - 1; ++i) {
        check.less(X, i, Z, i);
        check.less(Z, i, XP, i);
      }
      check.less(X, n - 1, Z, n - 1);
      break;
    case Pattern::CaseC_ii:
      check.less(Z, 0, X, 0);
      for (int i = 1; i < n; ++i) {
        check.less(XP, i - 1, Z, i);
        check.less(Z, i, X, i);
      }
      break;
    default:
      throw Error(ErrorKind::Mode, std::string(to_string(expected)) + " compares two root sets");
  }
  return check.finish();
}

}  // namespace qortho
