#include "symbol.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace latref {

namespace {

int sign_of_class(int c) { return (c % 8 == 1 || c % 8 == 7) ? +1 : -1; }

// Unit class mod 8 of a nonzero rational with odd numerator and denominator.
int unit8(const Rat& q) { return (int)unit_class_mod(q, 2, 3); }

}  // namespace

const Constituent* LocalSymbol::at_scale(int s) const {
  for (auto& c : parts)
    if (c.scale == s) return &c;
  return nullptr;
}

int LocalSymbol::dim_at_scale(int s) const {
  const Constituent* c = at_scale(s);
  return c ? c->dim : 0;
}

int LocalSymbol::valuation() const {
  int v = 0;
  for (auto& c : parts) v += c.scale * c.dim;
  return v;
}

GenusSymbol::GenusSymbol(int rank, std::vector<LocalSymbol> locals)
    : rank_(rank), locals_(std::move(locals)) {
  std::sort(locals_.begin(), locals_.end(),
            [](const LocalSymbol& a, const LocalSymbol& b) { return a.p < b.p; });
  LATREF_CHECK(!locals_.empty() && locals_.front().p == 2,
               "genus symbol must carry a 2-adic part");
  det_ = 1;
  for (auto& ls : locals_) {
    LATREF_CHECK(ls.p == 2 || ls.valuation() > 0 || ls.parts.size() > 1,
                 "trivial local symbol stored at odd prime");
    int total = 0;
    int prev = -1;
    for (auto& c : ls.parts) {
      LATREF_CHECK(c.dim >= 1, "empty constituent");
      LATREF_CHECK(c.scale > prev, "constituent scales not increasing");
      prev = c.scale;
      total += c.dim;
    }
    LATREF_CHECK(total == rank_, "constituent dims do not sum to rank");
    Int pk = 1;
    for (int i = 0; i < ls.valuation(); ++i) pk *= ls.p;
    det_ *= pk;
  }
}

const LocalSymbol* GenusSymbol::local(long p) const {
  for (auto& ls : locals_)
    if (ls.p == p) return &ls;
  return nullptr;
}

LocalSymbol GenusSymbol::local_or_unimodular(long p) const {
  if (const LocalSymbol* ls = local(p)) return *ls;
  LocalSymbol ls;
  ls.p = p;
  Constituent c;
  c.scale = 0;
  c.dim = rank_;
  c.sign = (p == 2) ? sign_of_class((int)mod_pos(det_, 8).get_si())
                    : kronecker(det_, p);
  c.even = true;
  c.oddity = 0;
  ls.parts.push_back(c);
  return ls;
}

bool GenusSymbol::is_even() const {
  const LocalSymbol* two = local(2);
  const Constituent* c0 = two ? two->at_scale(0) : nullptr;
  return !c0 || c0->even;
}

bool GenusSymbol::is_primitive() const {
  for (auto& ls : locals_)
    if (ls.parts.front().scale > 0) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Symbol extraction from lattices

namespace {

// Splits a 2-adically unimodular rational Gram into odd 1x1 units and even
// 2x2 pieces; returns (unit classes mod 8, number of det=3-class even pieces,
// total even dimension).
struct TwoAdicShape {
  std::vector<int> units;
  int minus_even_pieces = 0;
  int even_dim = 0;
};

TwoAdicShape split_two_adic_unimodular(RatMat A) {
  TwoAdicShape shape;
  int n = A.rows();
  std::vector<int> active(n);
  for (int i = 0; i < n; ++i) active[i] = i;
  while (!active.empty()) {
    int odd_diag = -1;
    for (int i : active)
      if (A.at(i, i) != 0 && rat_valuation(A.at(i, i), 2) == 0) {
        odd_diag = i;
        break;
      }
    if (odd_diag >= 0) {
      shape.units.push_back(unit8(A.at(odd_diag, odd_diag)));
      Rat inv = 1 / A.at(odd_diag, odd_diag);
      active.erase(std::find(active.begin(), active.end(), odd_diag));
      for (int k : active)
        for (int l : active) {
          if (l < k) continue;
          A.at(k, l) -= A.at(k, odd_diag) * inv * A.at(odd_diag, l);
          if (l != k) A.at(l, k) = A.at(k, l);
        }
      continue;
    }
    // No odd diagonal: take an even 2x2 piece on an odd off-diagonal entry.
    int oi = -1, oj = -1;
    for (size_t a = 0; a < active.size() && oi < 0; ++a)
      for (size_t b = a + 1; b < active.size(); ++b) {
        int i = active[a], j = active[b];
        if (A.at(i, j) != 0 && rat_valuation(A.at(i, j), 2) == 0) {
          oi = i;
          oj = j;
          break;
        }
      }
    LATREF_CHECK(oi >= 0, "block not 2-adically unimodular");
    RatMat B(2, 2);
    B.at(0, 0) = A.at(oi, oi);
    B.at(0, 1) = B.at(1, 0) = A.at(oi, oj);
    B.at(1, 1) = A.at(oj, oj);
    Rat d = det(B);
    if (unit8(d) == 3) shape.minus_even_pieces++;
    shape.even_dim += 2;
    RatMat Binv = inverse(B);
    std::vector<int> S{oi, oj};
    active.erase(std::find(active.begin(), active.end(), oi));
    active.erase(std::find(active.begin(), active.end(), oj));
    for (int k : active)
      for (int l : active) {
        if (l < k) continue;
        Rat corr = 0;
        for (int a = 0; a < 2; ++a)
          for (int b = 0; b < 2; ++b)
            corr += A.at(k, S[a]) * Binv.at(a, b) * A.at(S[b], l);
        A.at(k, l) -= corr;
        if (l != k) A.at(l, k) = A.at(k, l);
      }
  }
  return shape;
}

}  // namespace

LocalSymbol local_symbol(const JordanChain& chain) {
  LocalSymbol ls;
  ls.p = chain.p;
  for (const JordanBlock& b : chain.blocks) {
    Constituent c;
    c.scale = b.scale;
    c.dim = b.dim();
    Rat d = det(b.unit_gram);
    if (chain.p == 2) {
      int cls = unit8(d);
      c.sign = sign_of_class(cls);
      TwoAdicShape shape = split_two_adic_unimodular(b.unit_gram);
      c.even = shape.units.empty();
      if (c.even) {
        c.oddity = 0;
      } else {
        int t = 4 * shape.minus_even_pieces;
        for (int u : shape.units) t += u;
        c.oddity = ((t % 8) + 8) % 8;
      }
    } else {
      c.sign = kronecker(d.get_num(), chain.p) * kronecker(d.get_den(), chain.p);
      c.even = true;
      c.oddity = 0;
    }
    ls.parts.push_back(c);
  }
  return ls;
}

LocalSymbol local_symbol(const GramLattice& L, long p) {
  return local_symbol(jordan_decompose(L, p));
}

GenusSymbol genus_symbol(const GramLattice& L) {
  std::vector<LocalSymbol> locals;
  locals.push_back(local_symbol(L, 2));
  for (auto& [p, e] : factor(L.det()))
    if (p != 2) locals.push_back(local_symbol(L, p));
  return GenusSymbol(L.rank(), std::move(locals));
}

// ---------------------------------------------------------------------------
// Square free predicates

bool is_square_free_at(const GenusSymbol& g, long p) {
  const LocalSymbol* ls = g.local(p);
  if (!ls) return true;
  return ls->max_scale() <= 1;
}

bool is_square_free(const GenusSymbol& g) {
  for (auto& ls : g.locals())
    if (ls.max_scale() > 1) return false;
  return true;
}

bool is_strongly_square_free(const GenusSymbol& g) {
  if (!is_square_free(g)) return false;
  for (auto& ls : g.locals())
    if (ls.dim_at_scale(0) < ls.dim_at_scale(1)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// 2-adic canonicalization: oddity fusion and sign walking

namespace {

struct TwoAdicState {
  // One entry per scale 0..maxscale (possibly dim 0).
  std::vector<int> dims;
  std::vector<bool> even;
  std::vector<int> signs;    // +1/-1, meaningful when dim > 0
  std::vector<int> oddity;   // per scale; fused totals live on compartment head

  bool operator<(const TwoAdicState& o) const {
    return std::tie(signs, oddity) < std::tie(o.signs, o.oddity);
  }
  bool operator==(const TwoAdicState& o) const {
    return signs == o.signs && oddity == o.oddity;
  }
};

// Compartments: maximal runs of consecutive scales with nonzero Type I
// constituents. Trains: maximal runs not containing two consecutive empty
// scales; walking is allowed between nonzero scales of one train.
std::vector<std::pair<int, int>> compartments_of(const TwoAdicState& s) {
  std::vector<std::pair<int, int>> out;
  int n = (int)s.dims.size();
  int start = -1;
  for (int i = 0; i <= n; ++i) {
    bool oddc = i < n && s.dims[i] > 0 && !s.even[i];
    if (oddc && start < 0) start = i;
    if (!oddc && start >= 0) {
      out.emplace_back(start, i - 1);
      start = -1;
    }
  }
  return out;
}

std::vector<std::vector<int>> trains_of(const TwoAdicState& s) {
  std::vector<std::vector<int>> out;
  int n = (int)s.dims.size();
  std::vector<int> cur;
  for (int i = 0; i < n; ++i) {
    if (s.dims[i] > 0) {
      cur.push_back(i);
    } else if (i + 1 <= n - 1 && s.dims[i + 1] == 0) {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

// Walk signs between scales a < b of the same train: both signs flip and
// every compartment meeting [a, b] has its oddity shifted by 4.
TwoAdicState walk(const TwoAdicState& s, int a, int b,
                  const std::vector<std::pair<int, int>>& comps) {
  TwoAdicState t = s;
  t.signs[a] = -t.signs[a];
  t.signs[b] = -t.signs[b];
  for (auto& [lo, hi] : comps)
    if (hi >= a && lo <= b) {
      // fused total lives on the head scale
      t.oddity[lo] = (t.oddity[lo] + 4) % 8;
    }
  return t;
}

TwoAdicState fuse(const LocalSymbol& two) {
  int maxs = two.max_scale();
  TwoAdicState s;
  s.dims.assign(maxs + 1, 0);
  s.even.assign(maxs + 1, true);
  s.signs.assign(maxs + 1, +1);
  s.oddity.assign(maxs + 1, 0);
  for (auto& c : two.parts) {
    s.dims[c.scale] = c.dim;
    s.even[c.scale] = c.even;
    s.signs[c.scale] = c.sign;
    s.oddity[c.scale] = c.oddity;
  }
  // Oddity fusion: totals onto compartment heads.
  for (auto& [lo, hi] : compartments_of(s)) {
    int t = 0;
    for (int i = lo; i <= hi; ++i) {
      t += s.oddity[i];
      s.oddity[i] = 0;
    }
    s.oddity[lo] = ((t % 8) + 8) % 8;
  }
  return s;
}

TwoAdicState canonical_two_adic_state(const LocalSymbol& two) {
  TwoAdicState start = fuse(two);
  auto comps = compartments_of(start);
  auto trains = trains_of(start);
  std::set<TwoAdicState> seen{start};
  std::vector<TwoAdicState> frontier{start};
  TwoAdicState best = start;
  while (!frontier.empty()) {
    std::vector<TwoAdicState> next;
    for (auto& st : frontier)
      for (auto& train : trains)
        for (size_t x = 0; x < train.size(); ++x)
          for (size_t y = x + 1; y < train.size(); ++y) {
            TwoAdicState w = walk(st, train[x], train[y], comps);
            if (seen.insert(w).second) {
              next.push_back(w);
              if (w < best) best = w;
            }
          }
    frontier = std::move(next);
  }
  return best;
}

LocalSymbol canonical_two_adic(const LocalSymbol& two) {
  if (two.parts.size() <= 0) return two;
  TwoAdicState best = canonical_two_adic_state(two);
  LocalSymbol out;
  out.p = 2;
  for (int sscale = 0; sscale < (int)best.dims.size(); ++sscale) {
    if (best.dims[sscale] == 0) continue;
    Constituent c;
    c.scale = sscale;
    c.dim = best.dims[sscale];
    c.even = best.even[sscale];
    c.sign = best.signs[sscale];
    c.oddity = best.oddity[sscale];
    out.parts.push_back(c);
  }
  return out;
}

}  // namespace

GenusSymbol canonicalize(const GenusSymbol& g) {
  std::vector<LocalSymbol> locals;
  for (auto& ls : g.locals()) {
    if (ls.p == 2)
      locals.push_back(canonical_two_adic(ls));
    else
      locals.push_back(ls);
  }
  return GenusSymbol(g.rank(), std::move(locals));
}

std::string canonical_key(const GenusSymbol& g) {
  GenusSymbol c = canonicalize(g);
  std::ostringstream os;
  os << c.rank();
  for (auto& ls : c.locals()) {
    os << "|" << ls.p << ":";
    for (auto& cc : ls.parts)
      os << cc.scale << "," << cc.dim << "," << cc.sign << ","
         << (cc.even ? "e" : "o") << cc.oddity << ";";
  }
  return os.str();
}

bool same_genus(const GenusSymbol& a, const GenusSymbol& b) {
  return canonical_key(a) == canonical_key(b);
}

// ---------------------------------------------------------------------------
// Realizability of 2-adic constituents

const std::vector<std::pair<int, int>>& two_adic_classes(int dim, bool even) {
  static std::map<std::pair<int, bool>, std::vector<std::pair<int, int>>> cache;
  auto key = std::make_pair(dim, even);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  std::set<std::pair<int, int>> found;
  if (even) {
    // Sums of 2x2 even pieces of det class 7 (oddity 0) and 3 (oddity 4 when
    // absorbed into an odd neighbour; standalone Type II has no oddity).
    if (dim % 2 == 0 && dim >= 2) {
      for (int minus = 0; minus <= dim / 2; ++minus) {
        int cls = 1;
        for (int i = 0; i < minus; ++i) cls = cls * 3 % 8;
        for (int i = 0; i < dim / 2 - minus; ++i) cls = cls * 7 % 8;
        found.insert({cls, 0});
      }
    }
  } else {
    // Diagonal forms <u_1,...,u_dim>, u_i in {1,3,5,7}.
    std::set<std::pair<int, int>> cur{{1, 0}};
    for (int i = 0; i < dim; ++i) {
      std::set<std::pair<int, int>> nxt;
      for (auto& [cls, od] : cur)
        for (int u : {1, 3, 5, 7}) nxt.insert({cls * u % 8, (od + u) % 8});
      cur = std::move(nxt);
    }
    found = std::move(cur);
  }
  auto& slot = cache[key];
  slot.assign(found.begin(), found.end());
  return slot;
}

int two_adic_det_class(const Constituent& c) {
  int cls = -1;
  for (auto& [d, od] : two_adic_classes(c.dim, c.even)) {
    if (sign_of_class(d) != c.sign) continue;
    if (!c.even && od != c.oddity) continue;
    LATREF_CHECK(cls == -1 || cls == d, "ambiguous 2-adic determinant class");
    cls = d;
  }
  LATREF_CHECK(cls != -1, "unrealizable 2-adic constituent");
  return cls;
}

// ---------------------------------------------------------------------------
// Oddity formula and existence

namespace {

int p_excess(const LocalSymbol& ls) {
  LATREF_CHECK(ls.p != 2, "p_excess at 2");
  Int total = 0;
  for (auto& c : ls.parts) {
    Int pi = 1;
    for (int i = 0; i < c.scale; ++i) pi *= ls.p;
    total += Int(c.dim) * (pi - 1);
    if (c.scale % 2 == 1 && c.sign == -1) total += 4;
  }
  return (int)mod_pos(total, 8).get_si();
}

int two_oddity(const LocalSymbol& ls) {
  int total = 0;
  for (auto& c : ls.parts) {
    total += c.oddity;
    if (c.scale % 2 == 1 && c.sign == -1) total += 4;
  }
  return ((total % 8) + 8) % 8;
}

}  // namespace

int oddity_formula_total(const GenusSymbol& g) {
  int total = 0;
  for (auto& ls : g.locals()) {
    if (ls.p == 2)
      total += two_oddity(ls);
    else
      total -= p_excess(ls);
  }
  return ((total % 8) + 8) % 8;
}

bool symbol_exists(const GenusSymbol& g, std::string* why) {
  auto fail = [&](const std::string& m) {
    if (why) *why = m;
    return false;
  };
  const Int& d = g.det();
  for (auto& ls : g.locals()) {
    // Unit part of det at p.
    Int u = d;
    while (u % ls.p == 0) u /= ls.p;
    if (ls.p == 2) {
      int prod = 1;
      for (auto& c : ls.parts) {
        bool ok = false;
        for (auto& [cls, od] : two_adic_classes(c.dim, c.even))
          if (sign_of_class(cls) == c.sign && (c.even || od == c.oddity))
            ok = true;
        if (!ok) return fail("unrealizable 2-adic constituent");
        prod *= c.sign;
      }
      int want = sign_of_class((int)mod_pos(u, 8).get_si());
      if (prod != want) return fail("2-adic determinant class mismatch");
    } else {
      int prod = 1;
      for (auto& c : ls.parts) prod *= c.sign;
      if (prod != kronecker(u, ls.p))
        return fail("odd-prime determinant class mismatch");
    }
  }
  if (oddity_formula_total(g) != g.rank() % 8)
    return fail("oddity formula violated");
  return true;
}

// ---------------------------------------------------------------------------
// Printing

namespace {

std::string print_constituent(long p, const Constituent& c) {
  std::ostringstream os;
  Int q = 1;
  for (int i = 0; i < c.scale; ++i) q *= p;
  os << q.get_str();
  if (p == 2) {
    if (c.even)
      os << "_II";
    else
      os << "_" << c.oddity;
  }
  os << "^{" << (c.sign > 0 ? "+" : "-") << c.dim << "}";
  return os.str();
}

}  // namespace

std::string print_symbol(const GenusSymbol& g) {
  std::ostringstream os;
  os << (g.is_even() ? "II" : "I") << "(";
  std::string factors;
  for (auto& ls : g.locals())
    for (auto& c : ls.parts) {
      if (c.scale == 0) continue;
      factors += print_constituent(ls.p, c);
    }
  if (factors.empty()) {
    // Unimodular genus: print the 2-adic scale-0 part explicitly.
    const LocalSymbol* two = g.local(2);
    LATREF_CHECK(two && two->parts.size() == 1, "missing 2-adic part");
    factors = print_constituent(2, two->parts[0]);
  }
  os << factors << ")";
  return os.str();
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

struct RawFactor {
  Int q;        // prime power as printed
  bool even = false;
  bool has_oddity = false;
  int oddity = 0;
  int sign = +1;
  int dim = 0;
};

class Cursor {
 public:
  explicit Cursor(const std::string& s) : s_(s) {}
  void skip_ws() {
    while (i_ < s_.size() && isspace((unsigned char)s_[i_])) ++i_;
  }
  bool eof() {
    skip_ws();
    return i_ >= s_.size();
  }
  char peek() {
    skip_ws();
    return i_ < s_.size() ? s_[i_] : '\0';
  }
  bool consume(char c) {
    skip_ws();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }
  bool consume_str(const std::string& t) {
    skip_ws();
    if (s_.compare(i_, t.size(), t) == 0) {
      i_ += t.size();
      return true;
    }
    return false;
  }
  std::string number() {
    skip_ws();
    size_t start = i_;
    while (i_ < s_.size() && isdigit((unsigned char)s_[i_])) ++i_;
    LATREF_CHECK(i_ > start, "genus symbol: number expected");
    return s_.substr(start, i_ - start);
  }

 private:
  const std::string& s_;
  size_t i_ = 0;
};

RawFactor parse_factor(Cursor& cur) {
  RawFactor f;
  f.q = Int(cur.number());
  LATREF_CHECK(f.q >= 1, "genus symbol: bad prime power");
  if (cur.consume('_')) {
    bool braced = cur.consume('{');
    if (cur.consume_str("II")) {
      f.even = true;
    } else {
      f.has_oddity = true;
      f.oddity = std::stoi(cur.number()) % 8;
    }
    if (braced) LATREF_CHECK(cur.consume('}'), "genus symbol: '}' expected");
  }
  LATREF_CHECK(cur.consume('^'), "genus symbol: '^' expected");
  bool braced = cur.consume('{');
  if (cur.consume('-'))
    f.sign = -1;
  else
    cur.consume('+');
  f.dim = std::stoi(cur.number());
  LATREF_CHECK(f.dim >= 1, "genus symbol: bad dimension");
  if (braced) LATREF_CHECK(cur.consume('}'), "genus symbol: '}' expected");
  return f;
}

}  // namespace

GenusSymbol parse_symbol(const std::string& text, int rank) {
  Cursor cur(text);
  int prefix = 0;  // 0 = bare, 1 = I, 2 = II
  if (cur.consume_str("II("))
    prefix = 2;
  else if (cur.consume_str("I("))
    prefix = 1;
  std::vector<RawFactor> factors;
  while (!cur.eof() && cur.peek() != ')') factors.push_back(parse_factor(cur));
  if (prefix) LATREF_CHECK(cur.consume(')'), "genus symbol: ')' expected");
  LATREF_CHECK(cur.eof(), "genus symbol: trailing input");
  LATREF_CHECK(!factors.empty(), "genus symbol: empty");

  // Group by prime.
  std::map<long, std::vector<Constituent>> by_p;
  for (auto& f : factors) {
    long p;
    int scale = 0;
    if (f.q == 1) {
      p = 2;  // only the 2-adic scale-0 part is ever written as 1_t^{..}
      LATREF_CHECK(f.even || f.has_oddity, "scale-0 factor must be 2-adic");
    } else {
      auto fs = factor(f.q);
      LATREF_CHECK(fs.size() == 1, "factor base not a prime power");
      p = fs[0].first;
      scale = fs[0].second;
    }
    Constituent c;
    c.scale = scale;
    c.dim = f.dim;
    c.sign = f.sign;
    if (p == 2) {
      c.even = f.even;
      c.oddity = f.has_oddity ? f.oddity : 0;
      LATREF_CHECK(f.even || f.has_oddity,
                   "2-adic factor needs an oddity or II subscript");
    } else {
      LATREF_CHECK(!f.even && !f.has_oddity, "odd-prime factor with subscript");
      c.even = true;
      c.oddity = 0;
    }
    auto& vec = by_p[p];
    for (auto& prev : vec)
      LATREF_CHECK(prev.scale != c.scale, "duplicate scale in genus symbol");
    vec.push_back(c);
  }
  for (auto& [p, vec] : by_p)
    std::sort(vec.begin(), vec.end(),
              [](const Constituent& a, const Constituent& b) {
                return a.scale < b.scale;
              });

  // Determine the rank.
  int n = rank;
  if (n < 0) {
    LATREF_CHECK(prefix == 0, "rank required for compact I(...)/II(...) form");
    int sum = -1;
    for (auto& [p, vec] : by_p) {
      int s = 0;
      for (auto& c : vec) s += c.dim;
      LATREF_CHECK(sum < 0 || sum == s, "inconsistent dimensions across primes");
      sum = s;
    }
    n = sum;
  }

  // Fill the implied scale-0 constituents.
  Int det = 1;
  for (auto& [p, vec] : by_p) {
    Int pk = 1;
    for (auto& c : vec)
      for (int i = 0; i < c.scale * c.dim; ++i) pk *= p;
    det *= pk;
  }
  std::vector<LocalSymbol> locals;
  for (auto& [p, vec] : by_p) {
    int printed = 0;
    for (auto& c : vec) printed += c.dim;
    LATREF_CHECK(printed <= n, "dimensions exceed rank");
    if (printed < n) {
      LATREF_CHECK(vec.empty() || vec.front().scale > 0,
                   "explicit scale-0 part with missing dimensions");
      Constituent c0;
      c0.scale = 0;
      c0.dim = n - printed;
      Int u = det;
      while (u % p == 0) u /= p;
      int prod = 1;
      for (auto& c : vec) prod *= c.sign;
      if (p == 2) {
        int want = sign_of_class((int)mod_pos(u, 8).get_si());
        c0.sign = want * prod;
        c0.even = (prefix == 2);
        c0.oddity = 0;  // solved from the oddity formula below
      } else {
        c0.sign = kronecker(u, p) * prod;
        c0.even = true;
        c0.oddity = 0;
      }
      vec.insert(vec.begin(), c0);
    }
    LocalSymbol ls;
    ls.p = p;
    ls.parts = vec;
    locals.push_back(ls);
  }
  // Ensure the 2-adic symbol exists.
  if (!by_p.count(2)) {
    LocalSymbol two;
    two.p = 2;
    Constituent c0;
    c0.scale = 0;
    c0.dim = n;
    Int u = det;
    c0.sign = sign_of_class((int)mod_pos(u, 8).get_si());
    c0.even = (prefix == 2);
    c0.oddity = 0;
    two.parts.push_back(c0);
    locals.push_back(two);
  }
  GenusSymbol g(n, std::move(locals));

  // Solve the implied 2-adic oddity from the oddity formula when the scale-0
  // part was reconstructed as Type I.
  if (!g.is_even()) {
    const LocalSymbol* two = g.local(2);
    bool reconstructed = true;
    for (auto& f : factors)
      if (f.q == 1) reconstructed = false;
    if (reconstructed && two && two->at_scale(0)) {
      int now = oddity_formula_total(g);
      int delta = ((g.rank() % 8) - now + 16) % 8;
      std::vector<LocalSymbol> locals2 = g.locals();
      for (auto& ls : locals2)
        if (ls.p == 2)
          for (auto& c : ls.parts)
            if (c.scale == 0 && !c.even) c.oddity = (c.oddity + delta) % 8;
      g = GenusSymbol(g.rank(), std::move(locals2));
    }
  }

  std::string why;
  if (!symbol_exists(g, &why)) throw error("nonexistent genus: " + why);
  return g;
}

}  // namespace latref
