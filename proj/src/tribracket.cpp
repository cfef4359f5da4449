#include "vtri/tribracket.hpp"

#include <sstream>

#include "vtri/error.hpp"

namespace vtri {

std::string to_string(Identity id) {
  switch (id) {
    case Identity::VirtualInvolution: return "vii";
    case Identity::ClassicalLeft: return "iii.i";
    case Identity::ClassicalRight: return "iii.ii";
    case Identity::VirtualLeft: return "viii.i";
    case Identity::VirtualRight: return "viii.ii";
    case Identity::MixedLeft: return "v.i";
    case Identity::MixedRight: return "v.ii";
  }
  return "?";
}

VirtualTribracket::VirtualTribracket(TernaryTable classical, TernaryTable virtual_table)
    : classical_(std::move(classical)), virtual_(std::move(virtual_table)) {
  if (classical_.order() != virtual_.order())
    throw ValidationError("classical and virtual tables have different orders (" +
                          std::to_string(classical_.order()) + " vs " +
                          std::to_string(virtual_.order()) + ")");
}

VirtualTribracket VirtualTribracket::verified() const {
  const VerifyReport report = verify(*this, 1);
  if (!report.verified()) throw ValidationError(describe(report));
  VirtualTribracket copy = *this;
  copy.verified_ = true;
  return copy;
}

bool is_three_determined(const TernaryTable& t) {
  const int n = t.order();
  std::vector<char> seen(static_cast<std::size_t>(n) + 1);
  auto is_perm = [&](auto&& value_at) {
    std::fill(seen.begin(), seen.end(), 0);
    for (Element z = 1; z <= n; ++z) {
      const Element e = value_at(z);
      if (seen[static_cast<std::size_t>(e)]) return false;
      seen[static_cast<std::size_t>(e)] = 1;
    }
    return true;
  };
  for (Element x = 1; x <= n; ++x) {
    for (Element y = 1; y <= n; ++y) {
      if (!is_perm([&](Element z) { return t(x, y, z); })) return false;
      if (!is_perm([&](Element z) { return t(x, z, y); })) return false;
      if (!is_perm([&](Element z) { return t(z, x, y); })) return false;
    }
  }
  return true;
}

namespace {

class ViolationSink {
 public:
  explicit ViolationSink(std::size_t cap) : cap_(cap) {}

  // Returns false once the cap is reached.
  bool add(Identity id, Element a, Element b, Element c, Element d, Element lhs,
           Element rhs) {
    if (lhs == rhs) return true;
    if (out_.size() < cap_) out_.push_back({id, {a, b, c, d}, lhs, rhs});
    return out_.size() < cap_;
  }

  std::vector<Violation> take() { return std::move(out_); }

 private:
  std::size_t cap_;
  std::vector<Violation> out_;
};

// The two distributive-type identities for one operation.
bool check_pair_identities(const TernaryTable& t, Identity left, Identity right,
                           ViolationSink& sink) {
  const int n = t.order();
  for (Element a = 1; a <= n; ++a)
    for (Element b = 1; b <= n; ++b)
      for (Element c = 1; c <= n; ++c) {
        const Element abc = t(a, b, c);
        for (Element d = 1; d <= n; ++d) {
          const Element bcd = t(b, c, d);
          if (!sink.add(left, a, b, c, d, t(a, b, bcd), t(a, abc, t(abc, c, d))))
            return false;
          if (!sink.add(right, a, b, c, d, t(abc, c, d), t(t(a, b, bcd), bcd, d)))
            return false;
        }
      }
  return true;
}

void require_three_determined(const TernaryTable& t, const char* which) {
  if (!is_three_determined(t))
    throw ValidationError(std::string(which) +
                          " table is not three-determined (some slice is not a permutation)");
}

std::vector<Violation> virtual_violations(const VirtualTribracket& v, std::size_t cap) {
  const TernaryTable& t = v.classical();
  const TernaryTable& w = v.virtual_table();
  const int n = v.order();
  ViolationSink sink(cap);

  bool go = true;
  for (Element a = 1; go && a <= n; ++a)
    for (Element b = 1; go && b <= n; ++b)
      for (Element c = 1; go && c <= n; ++c)
        go = sink.add(Identity::VirtualInvolution, a, b, c, 0, w(a, w(a, b, c), c), b);
  if (go) go = check_pair_identities(t, Identity::ClassicalLeft, Identity::ClassicalRight, sink);
  if (go) go = check_pair_identities(w, Identity::VirtualLeft, Identity::VirtualRight, sink);
  for (Element a = 1; go && a <= n; ++a)
    for (Element b = 1; go && b <= n; ++b)
      for (Element c = 1; go && c <= n; ++c) {
        const Element abc = w(a, b, c);
        for (Element d = 1; go && d <= n; ++d) {
          const Element bcd = w(b, c, d);
          go = sink.add(Identity::MixedLeft, a, b, c, d, t(a, b, bcd), w(a, abc, t(abc, c, d))) &&
               sink.add(Identity::MixedRight, a, b, c, d, t(abc, c, d),
                        w(t(a, b, bcd), bcd, d));
        }
      }
  return sink.take();
}

}  // namespace

std::vector<Violation> check_classical_axioms(const TernaryTable& t, std::size_t cap) {
  require_three_determined(t, "classical");
  ViolationSink sink(cap);
  check_pair_identities(t, Identity::ClassicalLeft, Identity::ClassicalRight, sink);
  return sink.take();
}

std::vector<Violation> check_virtual_axioms(const VirtualTribracket& v, std::size_t cap) {
  require_three_determined(v.classical(), "classical");
  require_three_determined(v.virtual_table(), "virtual");
  return virtual_violations(v, cap);
}

VerifyReport verify(const VirtualTribracket& v, std::size_t cap) {
  VerifyReport report;
  report.classical_three_determined = is_three_determined(v.classical());
  report.virtual_three_determined = is_three_determined(v.virtual_table());
  // The identities are still meaningful without axiom (i); report them too.
  report.violations = virtual_violations(v, cap);
  return report;
}

std::string describe(const VerifyReport& report) {
  std::ostringstream os;
  os << "classical table three-determined: " << (report.classical_three_determined ? "yes" : "no")
     << "\nvirtual table three-determined: " << (report.virtual_three_determined ? "yes" : "no");
  if (report.violations.empty()) {
    os << "\nall identities hold";
  } else {
    for (const Violation& v : report.violations) {
      os << "\nidentity " << to_string(v.identity) << " fails at (a,b,c";
      if (v.identity != Identity::VirtualInvolution) os << ",d";
      os << ")=(" << v.tuple[0] << ',' << v.tuple[1] << ',' << v.tuple[2];
      if (v.identity != Identity::VirtualInvolution) os << ',' << v.tuple[3];
      os << "): " << v.lhs << " != " << v.rhs;
    }
  }
  os << "\nverdict: " << (report.verified() ? "verified" : "not verified");
  return os.str();
}

InverseTables::InverseTables(const TernaryTable& t) : order_(t.order()) {
  require_three_determined(t, "inverted");
  const auto size = static_cast<std::size_t>(order_) * order_ * order_;
  s1_.assign(size, 0);
  s2_.assign(size, 0);
  s3_.assign(size, 0);
  for (Element a = 1; a <= order_; ++a)
    for (Element b = 1; b <= order_; ++b)
      for (Element c = 1; c <= order_; ++c) {
        const Element d = t(a, b, c);
        s1_[idx(b, c, d)] = a;
        s2_[idx(a, c, d)] = b;
        s3_[idx(a, b, d)] = c;
      }
}

}  // namespace vtri
