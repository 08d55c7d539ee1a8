#include "spine/semilattice.hpp"

#include <algorithm>

#include "spine/error.hpp"

namespace spine {

namespace {

using Mask = std::uint32_t;

void require_enumerable(FiniteSemilattice const& s) {
  if (s.size() > kMaxEnumerationSize) {
    throw Error(ErrorKind::size_limit,
                "brute-force enumeration supports at most " +
                    std::to_string(kMaxEnumerationSize) + " elements, got " +
                    std::to_string(s.size()));
  }
}

std::vector<Mask> down_masks(FiniteSemilattice const& s) {
  std::vector<Mask> down(s.size(), 0);
  for (ElementId y = 0; y < s.size(); ++y) {
    for (ElementId x = 0; x < s.size(); ++x) {
      if (s.join(x, y) == y) down[y] |= Mask(1) << x;
    }
  }
  return down;
}

bool mask_is_hereditary(FiniteSemilattice const& s, std::vector<Mask> const& down, Mask m) {
  if (m == 0) return false;
  for (ElementId x = 0; x < s.size(); ++x) {
    if (!(m >> x & 1)) continue;
    if ((down[x] & m) != down[x]) return false;
    for (ElementId y = x + 1; y < s.size(); ++y) {
      if ((m >> y & 1) && !(m >> s.join(x, y) & 1)) return false;
    }
  }
  return true;
}

HereditarySet from_mask(Mask m, std::size_t n) {
  HereditarySet h;
  for (ElementId x = 0; x < n; ++x) {
    if (m >> x & 1) h.members.push_back(x);
  }
  return h;
}

}  // namespace

FiniteSemilattice::FiniteSemilattice(std::vector<std::string> labels,
                                     std::vector<ElementId> join_table,
                                     std::optional<ElementId> unit)
    : _labels(std::move(labels)), _table(std::move(join_table)), _unit(unit) {
  std::size_t n = _labels.size();
  if (n == 0) throw Error(ErrorKind::invalid_argument, "semilattice must be non-empty");
  if (_table.size() != n * n) {
    throw Error(ErrorKind::invalid_argument, "join table must have size^2 entries");
  }
  for (auto v : _table) check(v);
  if (_unit) check(*_unit);
}

FiniteSemilattice FiniteSemilattice::chain(std::vector<std::string> labels) {
  std::size_t n = labels.size();
  std::vector<ElementId> table(n * n);
  for (ElementId x = 0; x < n; ++x) {
    for (ElementId y = 0; y < n; ++y) table[x * n + y] = std::max(x, y);
  }
  return FiniteSemilattice(std::move(labels), std::move(table), ElementId(0));
}

FiniteSemilattice FiniteSemilattice::free_on(std::vector<std::string> const& generators) {
  if (generators.size() > kMaxEnumerationSize) {
    throw Error(ErrorKind::size_limit, "too many generators for a free semilattice");
  }
  std::size_t n = std::size_t(1) << generators.size();
  std::vector<std::string> labels(n);
  for (std::size_t m = 0; m < n; ++m) {
    std::string l = "{";
    bool first = true;
    for (std::size_t g = 0; g < generators.size(); ++g) {
      if (!(m >> g & 1)) continue;
      if (!first) l += ",";
      l += generators[g];
      first = false;
    }
    labels[m] = l + "}";
  }
  std::vector<ElementId> table(n * n);
  for (ElementId x = 0; x < n; ++x) {
    for (ElementId y = 0; y < n; ++y) table[x * n + y] = x | y;
  }
  return FiniteSemilattice(std::move(labels), std::move(table), ElementId(0));
}

void FiniteSemilattice::check(ElementId x) const {
  if (x >= _labels.size()) {
    throw Error(ErrorKind::unknown_element, "unknown element id " + std::to_string(x));
  }
}

std::string const& FiniteSemilattice::label(ElementId x) const {
  check(x);
  return _labels[x];
}

std::optional<ElementId> FiniteSemilattice::find(std::string const& label) const {
  auto it = std::find(_labels.begin(), _labels.end(), label);
  if (it == _labels.end()) return std::nullopt;
  return ElementId(it - _labels.begin());
}

ElementId FiniteSemilattice::join(ElementId x, ElementId y) const {
  check(x);
  check(y);
  return _table[x * _labels.size() + y];
}

bool HereditarySet::contains(ElementId x) const {
  return std::binary_search(members.begin(), members.end(), x);
}

std::vector<AxiomViolation> verify_axioms(FiniteSemilattice const& s) {
  std::vector<AxiomViolation> out;
  auto n = ElementId(s.size());
  for (ElementId x = 0; x < n; ++x) {
    if (s.join(x, x) != x) out.push_back({Law::idempotency, {x}});
    if (s.unit() && s.join(*s.unit(), x) != x) out.push_back({Law::unit, {x}});
    for (ElementId y = x + 1; y < n; ++y) {
      if (s.join(x, y) != s.join(y, x)) out.push_back({Law::commutativity, {x, y}});
    }
    for (ElementId y = 0; y < n; ++y) {
      for (ElementId z = 0; z < n; ++z) {
        if (s.join(s.join(x, y), z) != s.join(x, s.join(y, z))) {
          out.push_back({Law::associativity, {x, y, z}});
        }
      }
    }
  }
  return out;
}

bool leq(FiniteSemilattice const& s, ElementId x, ElementId y) { return s.join(x, y) == y; }

std::optional<ElementId> meet(FiniteSemilattice const& s, ElementId x, ElementId y) {
  std::optional<ElementId> best;
  for (ElementId z = 0; z < s.size(); ++z) {
    if (!leq(s, z, x) || !leq(s, z, y)) continue;
    if (!best || leq(s, *best, z)) {
      best = z;
    } else if (!leq(s, z, *best)) {
      return std::nullopt;  // two incomparable maximal lower bounds
    }
  }
  if (!best) return std::nullopt;
  for (ElementId z = 0; z < s.size(); ++z) {
    if (leq(s, z, x) && leq(s, z, y) && !leq(s, z, *best)) return std::nullopt;
  }
  return best;
}

bool is_hereditary_set(FiniteSemilattice const& s, std::vector<ElementId> const& members) {
  if (members.empty()) return false;
  std::vector<bool> in(s.size(), false);
  for (auto m : members) {
    if (m >= s.size()) return false;
    in[m] = true;
  }
  for (ElementId x = 0; x < s.size(); ++x) {
    if (!in[x]) continue;
    for (ElementId y = 0; y < s.size(); ++y) {
      if (leq(s, y, x) && !in[y]) return false;
      if (in[y] && !in[s.join(x, y)]) return false;
    }
  }
  return true;
}

HereditarySet make_hereditary_set(FiniteSemilattice const& s, std::vector<ElementId> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (!is_hereditary_set(s, members)) {
    throw Error(ErrorKind::invalid_argument, "not a hereditary directed set");
  }
  return HereditarySet{std::move(members)};
}

HereditarySet principal_set(FiniteSemilattice const& s, ElementId x) {
  s.label(x);
  HereditarySet h;
  for (ElementId y = 0; y < s.size(); ++y) {
    if (leq(s, y, x)) h.members.push_back(y);
  }
  return h;
}

std::vector<HereditarySet> enumerate_hereditary_sets(FiniteSemilattice const& s) {
  require_enumerable(s);
  auto down = down_masks(s);
  std::vector<HereditarySet> out;
  Mask limit = Mask(1) << s.size();
  for (Mask m = 1; m < limit; ++m) {
    if (mask_is_hereditary(s, down, m)) out.push_back(from_mask(m, s.size()));
  }
  return out;
}

bool is_semicharacter(FiniteSemilattice const& s, Semicharacter const& w) {
  if (w.size() != s.size()) return false;
  bool nonzero = false;
  for (ElementId x = 0; x < s.size(); ++x) {
    if (w[x] > 1) return false;
    nonzero = nonzero || w[x] == 1;
    for (ElementId y = x; y < s.size(); ++y) {
      if (w[s.join(x, y)] != (w[x] & w[y])) return false;
    }
  }
  return nonzero;
}

std::vector<Semicharacter> semicharacters(FiniteSemilattice const& s) {
  require_enumerable(s);
  std::vector<Semicharacter> out;
  Mask limit = Mask(1) << s.size();
  Semicharacter w(s.size());
  for (Mask m = 1; m < limit; ++m) {
    for (ElementId x = 0; x < s.size(); ++x) w[x] = std::uint8_t(m >> x & 1);
    if (is_semicharacter(s, w)) out.push_back(w);
  }
  return out;
}

Semicharacter indicator(FiniteSemilattice const& s, HereditarySet const& h) {
  Semicharacter w(s.size(), 0);
  for (auto m : h.members) {
    s.label(m);
    w[m] = 1;
  }
  return w;
}

std::optional<ElementId> is_principal(FiniteSemilattice const& s, HereditarySet const& h) {
  if (!is_hereditary_set(s, h.members)) {
    throw Error(ErrorKind::invalid_argument, "not a hereditary directed set");
  }
  for (auto x : h.members) {
    if (principal_set(s, x) == h) return x;
  }
  return std::nullopt;
}

}  // namespace spine
