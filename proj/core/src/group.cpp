#include "hel/group.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace hel {

using nlohmann::json;

GroupDescriptor GroupDescriptor::integers() {
  GroupDescriptor d;
  d.kind = GroupKind::Integers;
  return d;
}

GroupDescriptor GroupDescriptor::cyclic(i64 n) {
  if (n < 1) throw std::invalid_argument("cyclic modulus must be >= 1");
  GroupDescriptor d;
  d.kind = GroupKind::CyclicModN;
  d.modulus = n;
  return d;
}

GroupDescriptor GroupDescriptor::boolean_cube(int n) {
  if (n < 0 || n > 62) throw std::invalid_argument("boolean cube dimension out of range");
  GroupDescriptor d;
  d.kind = GroupKind::BooleanCube;
  d.dimension = n;
  return d;
}

GroupDescriptor GroupDescriptor::product(std::vector<GroupDescriptor> fs) {
  if (fs.empty()) throw std::invalid_argument("product of groups must be non-empty");
  GroupDescriptor d;
  d.kind = GroupKind::Product;
  d.factors = std::move(fs);
  return d;
}

GroupDescriptor GroupDescriptor::power(int t) const {
  if (t < 1) throw std::invalid_argument("power requires t >= 1");
  if (t == 1) return *this;
  return product(std::vector<GroupDescriptor>(static_cast<std::size_t>(t), *this));
}

bool GroupDescriptor::operator==(const GroupDescriptor& o) const {
  if (kind != o.kind) return false;
  switch (kind) {
    case GroupKind::Integers: return true;
    case GroupKind::CyclicModN: return modulus == o.modulus;
    case GroupKind::BooleanCube: return dimension == o.dimension;
    case GroupKind::Product: return factors == o.factors;
  }
  return false;
}

std::size_t GroupDescriptor::leaf_count() const {
  if (kind != GroupKind::Product) return 1;
  std::size_t n = 0;
  for (const auto& f : factors) n += f.leaf_count();
  return n;
}

std::optional<u64> GroupDescriptor::size() const {
  switch (kind) {
    case GroupKind::Integers: return std::nullopt;
    case GroupKind::CyclicModN: return static_cast<u64>(modulus);
    case GroupKind::BooleanCube: return u64(1) << dimension;
    case GroupKind::Product: {
      u64 total = 1;
      for (const auto& f : factors) {
        auto s = f.size();
        if (!s) return std::nullopt;
        total *= *s;  // desk-scale groups; no practical overflow
      }
      return total;
    }
  }
  return std::nullopt;
}

std::string GroupDescriptor::to_string() const {
  switch (kind) {
    case GroupKind::Integers: return "Z";
    case GroupKind::CyclicModN: return "Z/" + std::to_string(modulus);
    case GroupKind::BooleanCube: return "F2^" + std::to_string(dimension);
    case GroupKind::Product: {
      std::string s = "(";
      for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i) s += " x ";
        s += factors[i].to_string();
      }
      return s + ")";
    }
  }
  return "?";
}

namespace {

// Flattened per-leaf view used by element arithmetic.
void collect_leaves(const GroupDescriptor& d, std::vector<const GroupDescriptor*>& out) {
  if (d.kind == GroupKind::Product) {
    for (const auto& f : d.factors) collect_leaves(f, out);
  } else {
    out.push_back(&d);
  }
}

std::vector<const GroupDescriptor*> leaves_of(const GroupDescriptor& d) {
  std::vector<const GroupDescriptor*> out;
  collect_leaves(d, out);
  return out;
}

i64 leaf_add(const GroupDescriptor& leaf, i64 a, i64 b) {
  switch (leaf.kind) {
    case GroupKind::Integers: return checked_add(a, b);
    case GroupKind::CyclicModN: {
      i64 s = a + b;  // both in [0,N), N <= 2^62
      if (s >= leaf.modulus) s -= leaf.modulus;
      return s;
    }
    case GroupKind::BooleanCube: return a ^ b;
    default: throw std::logic_error("leaf_add on product");
  }
}

i64 leaf_neg(const GroupDescriptor& leaf, i64 a) {
  switch (leaf.kind) {
    case GroupKind::Integers: return checked_neg(a);
    case GroupKind::CyclicModN: return a == 0 ? 0 : leaf.modulus - a;
    case GroupKind::BooleanCube: return a;
    default: throw std::logic_error("leaf_neg on product");
  }
}

i64 leaf_canonical(const GroupDescriptor& leaf, i64 a) {
  switch (leaf.kind) {
    case GroupKind::Integers: return a;
    case GroupKind::CyclicModN: {
      i64 r = a % leaf.modulus;
      if (r < 0) r += leaf.modulus;
      return r;
    }
    case GroupKind::BooleanCube: {
      i64 mask = (leaf.dimension == 0) ? 0 : ((i64(1) << leaf.dimension) - 1);
      return a & mask;
    }
    default: throw std::logic_error("leaf_canonical on product");
  }
}

bool leaf_canonical_ok(const GroupDescriptor& leaf, i64 a) {
  return leaf_canonical(leaf, a) == a;
}

void check_arity(const GroupDescriptor& d, const GroupElement& a) {
  if (a.size() != d.leaf_count()) throw std::invalid_argument("element arity does not match group");
}

}  // namespace

GroupElement group_zero(const GroupDescriptor& d) { return GroupElement(d.leaf_count(), 0); }

GroupElement group_add(const GroupDescriptor& d, const GroupElement& a, const GroupElement& b) {
  check_arity(d, a);
  check_arity(d, b);
  auto ls = leaves_of(d);
  GroupElement out(a.size());
  for (std::size_t i = 0; i < ls.size(); ++i) out[i] = leaf_add(*ls[i], a[i], b[i]);
  return out;
}

GroupElement group_neg(const GroupDescriptor& d, const GroupElement& a) {
  check_arity(d, a);
  auto ls = leaves_of(d);
  GroupElement out(a.size());
  for (std::size_t i = 0; i < ls.size(); ++i) out[i] = leaf_neg(*ls[i], a[i]);
  return out;
}

GroupElement group_sub(const GroupDescriptor& d, const GroupElement& a, const GroupElement& b) {
  return group_add(d, a, group_neg(d, b));
}

GroupElement group_canonical(const GroupDescriptor& d, GroupElement a) {
  check_arity(d, a);
  auto ls = leaves_of(d);
  for (std::size_t i = 0; i < ls.size(); ++i) a[i] = leaf_canonical(*ls[i], a[i]);
  return a;
}

bool element_in_group(const GroupDescriptor& d, const GroupElement& a) {
  if (a.size() != d.leaf_count()) return false;
  auto ls = leaves_of(d);
  for (std::size_t i = 0; i < ls.size(); ++i)
    if (!leaf_canonical_ok(*ls[i], a[i])) return false;
  return true;
}

std::vector<GroupElement> enumerate_group(const GroupDescriptor& d, u64 cap) {
  auto sz = d.size();
  if (!sz) throw std::invalid_argument("cannot enumerate an infinite group");
  if (*sz > cap) throw std::invalid_argument("group too large to enumerate");
  auto ls = leaves_of(d);
  std::vector<u64> radix(ls.size());
  for (std::size_t i = 0; i < ls.size(); ++i) radix[i] = *ls[i]->size();
  std::vector<GroupElement> out;
  out.reserve(*sz);
  GroupElement cur(ls.size(), 0);
  for (u64 n = 0; n < *sz; ++n) {
    out.push_back(cur);
    // mixed-radix increment, last coordinate fastest, keeps lexicographic order
    for (std::size_t i = ls.size(); i-- > 0;) {
      if (static_cast<u64>(++cur[i]) < radix[i]) break;
      cur[i] = 0;
    }
  }
  return out;
}

GroupElement concat_elements(const std::vector<const GroupElement*>& parts) {
  GroupElement out;
  std::size_t total = 0;
  for (auto* p : parts) total += p->size();
  out.reserve(total);
  for (auto* p : parts) out.insert(out.end(), p->begin(), p->end());
  return out;
}

FiniteSet::FiniteSet(GroupDescriptor desc, std::vector<GroupElement> elems)
    : desc_(std::move(desc)) {
  for (auto& e : elems) e = group_canonical(desc_, std::move(e));
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  elems_ = std::move(elems);
}

bool FiniteSet::contains(const GroupElement& e) const {
  return std::binary_search(elems_.begin(), elems_.end(), e);
}

std::size_t FiniteSet::index_of(const GroupElement& e) const {
  auto it = std::lower_bound(elems_.begin(), elems_.end(), e);
  if (it == elems_.end() || *it != e) return npos;
  return static_cast<std::size_t>(it - elems_.begin());
}

u64 FiniteSet::digest() const {
  u64 h = fnv1a(desc_.to_string().data(), desc_.to_string().size());
  for (const auto& e : elems_) h = fnv1a(e.data(), e.size() * sizeof(i64), h);
  return h;
}

FiniteSet negate_set(const FiniteSet& a) {
  std::vector<GroupElement> out;
  out.reserve(a.size());
  for (const auto& e : a) out.push_back(group_neg(a.descriptor(), e));
  return FiniteSet(a.descriptor(), std::move(out));
}

FiniteSet sumset(const FiniteSet& a, const FiniteSet& b, int sign_a, int sign_b) {
  if (a.descriptor() != b.descriptor())
    throw std::invalid_argument("sumset: descriptor mismatch");
  if ((sign_a != 1 && sign_a != -1) || (sign_b != 1 && sign_b != -1))
    throw std::invalid_argument("sumset: signs must be +-1");
  const auto& d = a.descriptor();
  std::vector<GroupElement> out;
  out.reserve(a.size() * b.size());
  for (const auto& x : a) {
    GroupElement xs = sign_a == 1 ? x : group_neg(d, x);
    for (const auto& y : b) {
      GroupElement ys = sign_b == 1 ? y : group_neg(d, y);
      out.push_back(group_add(d, xs, ys));
    }
  }
  return FiniteSet(d, std::move(out));
}

FiniteSet iterated_sumset(const FiniteSet& a, int n, int m) {
  if (n < 0 || m < 0 || n + m < 1) throw std::invalid_argument("iterated_sumset: need n+m >= 1");
  auto r = iterated_sumset_capped(a, n, m, static_cast<std::size_t>(-1));
  return *r;
}

std::optional<FiniteSet> iterated_sumset_capped(const FiniteSet& a, int n, int m,
                                                std::size_t cap) {
  if (n < 0 || m < 0 || n + m < 1) throw std::invalid_argument("iterated_sumset: need n+m >= 1");
  FiniteSet neg = negate_set(a);
  std::optional<FiniteSet> acc;
  auto step = [&](const FiniteSet& s) -> bool {
    if (!acc) {
      acc = s;
    } else {
      acc = sumset(*acc, s);
    }
    return acc->size() <= cap;
  };
  for (int i = 0; i < n; ++i)
    if (!step(a)) return std::nullopt;
  for (int i = 0; i < m; ++i)
    if (!step(neg)) return std::nullopt;
  return acc;
}

FiniteSet set_union(const FiniteSet& a, const FiniteSet& b) {
  if (a.descriptor() != b.descriptor()) throw std::invalid_argument("set_union: descriptor mismatch");
  std::vector<GroupElement> out(a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return FiniteSet(a.descriptor(), std::move(out));
}

FiniteSet set_intersect(const FiniteSet& a, const FiniteSet& b) {
  if (a.descriptor() != b.descriptor())
    throw std::invalid_argument("set_intersect: descriptor mismatch");
  std::vector<GroupElement> out;
  for (const auto& e : a)
    if (b.contains(e)) out.push_back(e);
  return FiniteSet(a.descriptor(), std::move(out));
}

FiniteSet set_difference(const FiniteSet& a, const FiniteSet& b) {
  if (a.descriptor() != b.descriptor())
    throw std::invalid_argument("set_difference: descriptor mismatch");
  std::vector<GroupElement> out;
  for (const auto& e : a)
    if (!b.contains(e)) out.push_back(e);
  return FiniteSet(a.descriptor(), std::move(out));
}

FiniteSet translate(const FiniteSet& a, const GroupElement& t) {
  std::vector<GroupElement> out;
  out.reserve(a.size());
  for (const auto& e : a) out.push_back(group_add(a.descriptor(), e, t));
  return FiniteSet(a.descriptor(), std::move(out));
}

FiniteSet cartesian_power(const FiniteSet& a, int t) {
  if (t < 1) throw std::invalid_argument("cartesian_power: t >= 1");
  GroupDescriptor dp = a.descriptor().power(t);
  if (a.empty()) return FiniteSet(dp, {});
  std::vector<GroupElement> out;
  std::vector<std::size_t> idx(static_cast<std::size_t>(t), 0);
  bool done = false;
  while (!done) {
    std::vector<const GroupElement*> parts;
    parts.reserve(idx.size());
    for (auto i : idx) parts.push_back(&a.elements()[i]);
    out.push_back(concat_elements(parts));
    done = true;
    for (std::size_t j = idx.size(); j-- > 0;) {
      if (++idx[j] < a.size()) {
        done = false;
        break;
      }
      idx[j] = 0;
    }
  }
  return FiniteSet(dp, std::move(out));
}

FiniteSet diagonal_power(const FiniteSet& a, int t) {
  if (t < 1) throw std::invalid_argument("diagonal_power: t >= 1");
  GroupDescriptor dp = a.descriptor().power(t);
  std::vector<GroupElement> out;
  out.reserve(a.size());
  for (const auto& e : a) {
    std::vector<const GroupElement*> parts(static_cast<std::size_t>(t), &e);
    out.push_back(concat_elements(parts));
  }
  return FiniteSet(dp, std::move(out));
}

namespace {

json group_to_json_obj(const GroupDescriptor& d) {
  json g;
  switch (d.kind) {
    case GroupKind::Integers: g["kind"] = "Z"; break;
    case GroupKind::CyclicModN:
      g["kind"] = "ZmodN";
      g["modulus"] = d.modulus;
      break;
    case GroupKind::BooleanCube:
      g["kind"] = "F2n";
      g["dimension"] = d.dimension;
      break;
    case GroupKind::Product: {
      g["kind"] = "product";
      json fs = json::array();
      for (const auto& f : d.factors) fs.push_back(group_to_json_obj(f));
      g["factors"] = fs;
      break;
    }
  }
  return g;
}

GroupDescriptor group_from_json_obj(const json& g) {
  std::string kind = g.at("kind").get<std::string>();
  if (kind == "Z") return GroupDescriptor::integers();
  if (kind == "ZmodN") return GroupDescriptor::cyclic(g.at("modulus").get<i64>());
  if (kind == "F2n") return GroupDescriptor::boolean_cube(g.at("dimension").get<int>());
  if (kind == "product") {
    std::vector<GroupDescriptor> fs;
    for (const auto& f : g.at("factors")) fs.push_back(group_from_json_obj(f));
    return GroupDescriptor::product(std::move(fs));
  }
  throw std::invalid_argument("unknown group kind: " + kind);
}

}  // namespace

std::string group_to_json(const GroupDescriptor& d) { return group_to_json_obj(d).dump(); }

std::string set_to_json(const FiniteSet& a) {
  json j;
  j["group"] = group_to_json_obj(a.descriptor());
  json elems = json::array();
  bool scalar = a.descriptor().leaf_count() == 1;
  for (const auto& e : a) {
    if (scalar) {
      elems.push_back(e[0]);
    } else {
      json arr = json::array();
      for (auto c : e) arr.push_back(c);
      elems.push_back(arr);
    }
  }
  j["elements"] = elems;
  return j.dump(2);
}

FiniteSet set_from_json(const std::string& text, std::vector<std::string>* warnings) {
  json j = json::parse(text);
  GroupDescriptor d = group_from_json_obj(j.at("group"));
  std::size_t leaves = d.leaf_count();
  std::vector<GroupElement> elems;
  for (const auto& je : j.at("elements")) {
    GroupElement e;
    if (je.is_number_integer()) {
      e.push_back(je.get<i64>());
    } else {
      for (const auto& c : je) e.push_back(c.get<i64>());
    }
    if (e.size() != leaves)
      throw std::invalid_argument("set file element arity does not match group");
    GroupElement canon = group_canonical(d, e);
    if (warnings && canon != e) warnings->push_back("non-canonical element canonicalized");
    elems.push_back(std::move(canon));
  }
  std::size_t before = elems.size();
  FiniteSet s(d, std::move(elems));
  if (warnings && s.size() != before)
    warnings->push_back("duplicate elements removed: " + std::to_string(before - s.size()));
  return s;
}

FiniteSet load_set_file(const std::string& path, std::vector<std::string>* warnings) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open set file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return set_from_json(ss.str(), warnings);
}

void save_set_file(const FiniteSet& a, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write set file: " + path);
  out << set_to_json(a) << "\n";
}

}  // namespace hel
