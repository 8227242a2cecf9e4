#include "alcove/affine_weyl.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <set>
#include <sstream>

namespace alcove {

namespace {

IntVec parse_int_list(const std::string& body) {
  IntVec out;
  std::string item;
  std::istringstream is(body);
  while (std::getline(is, item, ',')) {
    auto b = item.find_first_not_of(" \t");
    auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) {
      if (is.eof() && out.empty()) break;
      throw InputError("empty entry in list '[" + body + "]'");
    }
    item = item.substr(b, e - b + 1);
    char* end = nullptr;
    long long v = std::strtoll(item.c_str(), &end, 10);
    if (end == item.c_str() || *end != '\0') throw InputError("malformed integer '" + item + "'");
    out.push_back(v);
  }
  return out;
}

}  // namespace

AffineWeylGroup::AffineWeylGroup(const RootDatum& datum) : datum_(datum) {
  const auto& comps = datum_.components();
  for (std::size_t c = 0; c < comps.size(); ++c) {
    std::size_t theta = datum_.highest_roots()[c];
    simples_.push_back({datum_.coroot(theta), datum_.reflection(theta)});
    simple_names_.push_back(comps.size() == 1 ? "s0" : "s0_" + std::to_string(c + 1));
  }
  for (std::size_t i = 0; i < datum_.semisimple_rank(); ++i) {
    simples_.push_back(finite(datum_.simple_reflection(i)));
    simple_names_.push_back("s" + std::to_string(i + 1));
  }
  inv_positive_.resize(datum_.weyl_order());
  for (WeylElt u : datum_.elements()) {
    WeylElt ui = datum_.inverse(u);
    auto& row = inv_positive_[u.index];
    row.resize(datum_.num_positive());
    for (std::size_t k = 0; k < datum_.num_positive(); ++k) row[k] = datum_.is_positive(datum_.act_on_root(ui, k));
  }
}

AffElt AffineWeylGroup::translation(IntVec lambda) const {
  if (lambda.size() != datum_.rank()) throw InputError("translation has wrong rank");
  return {std::move(lambda), datum_.identity()};
}

AffElt AffineWeylGroup::mul(const AffElt& a, const AffElt& b) const {
  return {a.translation + datum_.act(a.finite, b.translation), datum_.mul(a.finite, b.finite)};
}

AffElt AffineWeylGroup::inv(const AffElt& a) const {
  WeylElt ui = datum_.inverse(a.finite);
  return {-datum_.act(ui, a.translation), ui};
}

AffElt AffineWeylGroup::power(const AffElt& w, std::size_t n) const {
  AffElt r = identity();
  for (std::size_t i = 0; i < n; ++i) r = mul(r, w);
  return r;
}

std::size_t AffineWeylGroup::length(const AffElt& w) const {
  const auto& pos = inv_positive_[w.finite.index];
  Int total = 0;
  for (std::size_t k = 0; k < datum_.num_positive(); ++k) {
    Int p = dot(w.translation, datum_.root(k));
    if (!pos[k]) p -= 1;
    total += p < 0 ? -p : p;
  }
  return static_cast<std::size_t>(total);
}

bool AffineWeylGroup::in_affine_weyl(const AffElt& w) const {
  return is_zero(kottwitz(w));
}

AffElt AffineWeylGroup::omega_element(const PiOneElt& kappa) const {
  AffElt w = translation(datum_.kottwitz_lift(kappa));
  std::size_t len = length(w);
  while (len > 0) {
    bool moved = false;
    for (std::size_t s = 0; s < num_simple(); ++s) {
      AffElt sw = left_mul_simple(s, w);
      std::size_t l2 = length(sw);
      if (l2 < len) {
        w = std::move(sw);
        len = l2;
        moved = true;
        break;
      }
    }
    if (!moved) throw IntegrityError("no descent from a positive-length element");
  }
  return w;
}

std::vector<PiOneElt> AffineWeylGroup::kappa_window(Int window) const {
  const auto& moduli = datum_.pi1_moduli();
  std::vector<PiOneElt> out{PiOneElt{}};
  for (Int m : moduli) {
    std::vector<PiOneElt> next;
    Int lo = m == 0 ? -window : 0;
    Int hi = m == 0 ? window : m - 1;
    for (const auto& prefix : out)
      for (Int v = lo; v <= hi; ++v) {
        PiOneElt p = prefix;
        p.push_back(v);
        next.push_back(std::move(p));
      }
    out = std::move(next);
  }
  return out;
}

std::vector<std::size_t> AffineWeylGroup::reduced_word(const AffElt& w, AffElt* omega) const {
  std::vector<std::size_t> word;
  AffElt cur = w;
  std::size_t len = length(cur);
  while (len > 0) {
    bool moved = false;
    for (std::size_t s = 0; s < num_simple(); ++s) {
      AffElt sw = left_mul_simple(s, cur);
      std::size_t l2 = length(sw);
      if (l2 < len) {
        word.push_back(s);
        cur = std::move(sw);
        len = l2;
        moved = true;
        break;
      }
    }
    if (!moved) throw IntegrityError("no descent from a positive-length element");
  }
  if (omega) *omega = cur;
  return word;
}

bool AffineWeylGroup::bruhat_leq(const AffElt& a, const AffElt& b) const {
  std::size_t la = length(a), lb = length(b);
  if (la > lb) return false;
  if (la == lb) return a == b;
  if (kottwitz(a) != kottwitz(b)) return false;
  {
    std::shared_lock lock(bruhat_mutex_);
    auto it = bruhat_memo_.find({a, b});
    if (it != bruhat_memo_.end()) return it->second;
  }
  bool result = false;
  for (std::size_t s = 0; s < num_simple(); ++s) {
    AffElt sb = left_mul_simple(s, b);
    if (length(sb) > lb) continue;
    // Lifting property: for s a left descent of b, a <= b iff min(a, sa) <= sb.
    AffElt sa = left_mul_simple(s, a);
    result = length(sa) < la ? bruhat_leq(sa, sb) : bruhat_leq(a, sb);
    break;
  }
  std::unique_lock lock(bruhat_mutex_);
  bruhat_memo_.emplace(std::make_pair(a, b), result);
  return result;
}

RatVec AffineWeylGroup::barycenter(const AffElt& w) const {
  return to_rational(w.translation) + datum_.act(w.finite, datum_.base_barycenter());
}

WeylElt AffineWeylGroup::chamber_of(const AffElt& w) const {
  auto [dom, witness] = datum_.dominant_rep(barycenter(w));
  return datum_.inverse(witness);
}

bool AffineWeylGroup::is_shrunken(const AffElt& w) const {
  RatVec b = barycenter(w);
  for (std::size_t k = 0; k < datum_.num_positive(); ++k) {
    Int f = datum_.pairing(b, k).floor();
    if (f == -1 || f == 0) return false;
  }
  return true;
}

WeylElt AffineWeylGroup::eta(const AffElt& w) const {
  WeylElt e2 = eta2(w);
  return datum_.mul(datum_.mul(datum_.inverse(e2), eta1(w)), e2);
}

DominantDecomposition AffineWeylGroup::dominant_decomposition(const AffElt& w) const {
  WeylElt x = chamber_of(w);
  WeylElt xi = datum_.inverse(x);
  return {x, datum_.act(xi, w.translation), datum_.mul(xi, w.finite)};
}

AffElt AffineWeylGroup::assemble(const DominantDecomposition& d) const {
  return mul(mul(finite(d.x), translation(d.mu)), finite(d.y));
}

std::string AffineWeylGroup::encode(const AffElt& w) const {
  std::string s = "t" + format_vec(w.translation) + ".u[";
  const auto& word = datum_.word(w.finite);
  for (std::size_t i = 0; i < word.size(); ++i) s += (i ? "," : "") + std::to_string(word[i] + 1);
  return s + "]";
}

AffElt AffineWeylGroup::decode(const std::string& text) const {
  auto dot_pos = text.find("].u[");
  if (text.size() < 7 || text.rfind("t[", 0) != 0 || dot_pos == std::string::npos || text.back() != ']')
    throw InputError("malformed element encoding '" + text + "'");
  IntVec lambda = parse_int_list(text.substr(2, dot_pos - 2));
  IntVec word = parse_int_list(text.substr(dot_pos + 4, text.size() - dot_pos - 5));
  std::vector<std::size_t> w;
  for (Int i : word) {
    if (i < 1) throw InputError("simple index in encoding must be >= 1");
    w.push_back(static_cast<std::size_t>(i - 1));
  }
  AffElt out = translation(std::move(lambda));
  out.finite = datum_.from_word(w);
  if (encode(out) != text) throw InputError("element encoding is not canonical: '" + text + "'");
  return out;
}

AffElt AffineWeylGroup::parse_key(const std::string& text) const {
  std::istringstream is(text);
  std::string tok;
  AffElt acc = identity();
  bool any = false;
  while (is >> tok) {
    any = true;
    AffElt g;
    if (tok == "1" || tok == "e") {
      g = identity();
    } else if (tok == "w0") {
      g = finite(datum_.longest_element());
    } else if (tok.rfind("t[", 0) == 0) {
      if (tok.find("].u[") != std::string::npos) {
        g = decode(tok);
      } else {
        if (tok.back() != ']') throw InputError("malformed translation literal '" + tok + "'");
        g = translation(parse_int_list(tok.substr(2, tok.size() - 3)));
      }
    } else {
      auto it = std::find(simple_names_.begin(), simple_names_.end(), tok);
      if (it == simple_names_.end()) throw InputError("unknown generator '" + tok + "'");
      g = simples_[static_cast<std::size_t>(it - simple_names_.begin())];
    }
    acc = mul(acc, g);
  }
  if (!any) throw InputError("empty element key");
  return acc;
}

std::shared_ptr<const std::vector<AffElt>> AffineWeylGroup::elements_of_length(const PiOneElt& kappa,
                                                                               std::size_t len) const {
  std::lock_guard lock(layer_mutex_);
  auto& layers = layers_[kappa];
  if (layers.empty()) layers.push_back(std::make_shared<const std::vector<AffElt>>(1, omega_element(kappa)));
  while (layers.size() <= len) {
    const auto& prev = *layers.back();
    std::size_t next_len = layers.size();
    std::set<AffElt> next;
    for (const auto& x : prev)
      for (std::size_t s = 0; s < num_simple(); ++s) {
        AffElt y = left_mul_simple(s, x);
        if (length(y) == next_len) next.insert(std::move(y));
      }
    layer_total_ += next.size();
    if (layer_total_ > layer_limit_)
      throw ResourceLimitError("length-layer enumeration exceeded " + std::to_string(layer_limit_) + " elements");
    layers.push_back(std::make_shared<const std::vector<AffElt>>(next.begin(), next.end()));
  }
  return layers[len];
}

}  // namespace alcove
