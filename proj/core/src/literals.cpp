#include "starforge/literals.hpp"

#include <algorithm>

#include "starforge/errors.hpp"

namespace starforge {

std::string render_ideal_literal(const IdealFamily& a) {
  const ForestRef& f = a.forest();
  if (a == IdealFamily::unit(f)) return "R";
  std::string out;
  for (int m = 0; m < f->leaf_count(); ++m) {
    if (m) out += "; ";
    out += f->name(f->leaf_prime(m)) + ": " + a.cut(m).render();
  }
  return out;
}

namespace {

std::string strip(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_top(const std::string& s, char sep) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '(' || c == '{' || c == '[') ++depth;
    if (c == ')' || c == '}' || c == ']') --depth;
    if (c == sep && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

Cut parse_cut(const ForestRef& f, LeafId m, const std::string& text) {
  std::string t = strip(text);
  if (t == "FULL") return Cut::full(f->branch(m));
  bool closed;
  size_t pos;
  if (t.rfind(">=", 0) == 0) {
    closed = true;
    pos = 2;
  } else if (t.rfind(">", 0) == 0) {
    closed = false;
    pos = 1;
  } else {
    throw parse_error("cut must start with '>=' or '>': '" + text + "'");
  }
  std::string rest = strip(t.substr(pos));
  auto at = rest.rfind('@');
  if (at == std::string::npos) throw parse_error("cut needs '@level': '" + text + "'");
  int level = std::atoi(strip(rest.substr(at + 1)).c_str());
  std::string tuple = strip(rest.substr(0, at));
  if (tuple.empty() || tuple.front() != '(' || tuple.back() != ')')
    throw parse_error("cut pivot must be a tuple: '" + text + "'");
  auto comps = split_top(tuple.substr(1, tuple.size() - 2), ',');
  const BranchRef& br = f->branch(m);
  if (level < 1 || level > static_cast<int>(br->size()))
    throw parse_error("cut level out of range for leaf '" + f->name(f->leaf_prime(m)) + "'");
  if (static_cast<int>(comps.size()) != level)
    throw parse_error("cut pivot arity must equal the level: '" + text + "'");
  std::vector<Surd> vals(br->size());
  for (int k = 1; k <= level; ++k)
    vals[k - 1] = parse_surd(strip(comps[k - 1]), (*br)[k - 1].surd_d());
  ValueVector piv(br, std::move(vals));
  return closed ? Cut::closed_at(std::move(piv), level) : Cut::open_at(std::move(piv), level);
}

}  // namespace

IdealFamily parse_ideal_literal(const ForestRef& f, const std::string& text) {
  std::string t = strip(text);
  if (t == "R") return IdealFamily::unit(f);
  if (t == "K") return IdealFamily::everything(f);
  std::vector<Cut> cuts;
  for (int m = 0; m < f->leaf_count(); ++m) cuts.push_back(Cut::unit(f->branch(m)));
  for (const std::string& entry : split_top(t, ';')) {
    std::string e = strip(entry);
    if (e.empty()) continue;
    auto colon_pos = e.find(':');
    if (colon_pos == std::string::npos)
      throw parse_error("ideal entry needs 'leaf: cut': '" + e + "'");
    std::string leaf = strip(e.substr(0, colon_pos));
    auto p = f->node_by_name(leaf);
    if (!p) throw scope_error("unknown leaf '" + leaf + "'");
    auto m = f->leaf_index(*p);
    if (!m) throw scope_error("'" + leaf + "' is not a maximal ideal");
    cuts[*m] = parse_cut(f, *m, e.substr(colon_pos + 1));
  }
  return IdealFamily(f, std::move(cuts));
}

namespace {

PrimeId resolve_node(const ForestRef& f, const std::string& name) {
  auto p = f->node_by_name(strip(name));
  if (!p) throw scope_error("unknown prime '" + strip(name) + "'");
  return *p;
}

BranchId resolve_branch(const ForestRef& f, const std::string& name) {
  auto decomp = standard_decomposition(f);
  std::string key = strip(name);
  for (const Branch& br : decomp) {
    PrimeId root = f->root_of(f->leaf_prime(br.parent_leaves[0]));
    if (f->name(root) == key) return br.id;
  }
  throw scope_error("unknown branch '" + key + "' (branches are named by their root prime)");
}

}  // namespace

StarExpr parse_star_literal(const ForestRef& f, const std::string& text) {
  std::string t = strip(text);
  if (t == "d") return StarExpr::identity();
  if (t == "v") return StarExpr::divisorial();
  auto call = [&](const char* head) -> std::optional<std::string> {
    std::string h = std::string(head) + "(";
    if (t.rfind(h, 0) == 0 && t.back() == ')')
      return t.substr(h.size(), t.size() - h.size() - 1);
    return std::nullopt;
  };
  if (auto body = call("spec")) {
    std::vector<PrimeId> primes;
    for (const auto& part : split_top(*body, ',')) primes.push_back(resolve_node(f, part));
    return StarExpr::spectral(std::move(primes));
  }
  if (auto body = call("meet")) {
    std::vector<StarExpr> parts;
    for (const auto& part : split_top(*body, ',')) parts.push_back(parse_star_literal(f, part));
    return StarExpr::meet(std::move(parts));
  }
  if (t.rfind("branches{", 0) == 0 && t.back() == '}') {
    std::string body = t.substr(9, t.size() - 10);
    auto decomp = standard_decomposition(f);
    std::map<BranchId, StarExpr> asgn;
    for (const auto& part : split_top(body, ',')) {
      auto colon_pos = part.find(':');
      if (colon_pos == std::string::npos)
        throw parse_error("branches entry needs 'name:expr': '" + part + "'");
      BranchId id = resolve_branch(f, part.substr(0, colon_pos));
      asgn.emplace(id, parse_star_literal(decomp[id].subforest, part.substr(colon_pos + 1)));
    }
    return StarExpr::branch_product(std::move(asgn));
  }
  if (auto body = call("transport")) {
    auto parts = split_top(*body, ',');
    if (parts.size() < 2) throw parse_error("transport needs (prime, expr)");
    PrimeId q = resolve_node(f, parts[0]);
    ForestRef cutf = cut_branch(f, q).forest;
    std::string rest = parts[1];
    for (size_t i = 2; i < parts.size(); ++i) rest += "," + parts[i];
    return StarExpr::transport(q, parse_star_literal(cutf, rest));
  }
  if (auto body = call("extend")) {
    auto parts = split_top(*body, ',');
    if (parts.size() < 2) throw parse_error("extend needs (expr, branch)");
    std::string branch_name = parts.back();
    std::string inner = parts[0];
    for (size_t i = 1; i + 1 < parts.size(); ++i) inner += "," + parts[i];
    BranchId id = resolve_branch(f, branch_name);
    return StarExpr::extended(parse_star_literal(f, inner), f, id);
  }
  throw parse_error("unknown star expression '" + text + "'");
}

}  // namespace starforge
