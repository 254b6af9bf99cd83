#include "blocklab/quiverlab.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <optional>
#include <sstream>
#include <unordered_map>

namespace blocklab {

namespace {

// ---------------------------------------------------------------------------
// DSL helpers
// ---------------------------------------------------------------------------

[[noreturn]] void parse_fail(std::size_t line, const std::string& what) {
  fail(errc::parse_error, "line " + std::to_string(line) + ": " + what);
}

std::vector<std::string> tokenize(const std::string& line) {
  // pad the separators so "a - b = c" and "a-b=c" tokenize the same way
  std::string padded;
  for (char c : line) {
    if (c == '+' || c == '-' || c == '=') {
      padded += ' ';
      padded += c;
      padded += ' ';
    } else {
      padded += c;
    }
  }
  std::istringstream in(padded);
  std::vector<std::string> tokens;
  std::string tok;
  while (in >> tok) tokens.push_back(tok);
  return tokens;
}

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

std::vector<Line> logical_lines(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::string current;
  std::istringstream in{std::string(text)};
  while (std::getline(in, current)) {
    ++number;
    if (auto hash = current.find('#'); hash != std::string::npos) current.erase(hash);
    std::vector<std::string> toks = tokenize(current);
    if (!toks.empty()) lines.push_back({number, std::move(toks)});
  }
  return lines;
}

bool parse_uint(const std::string& tok, std::uint64_t& out) {
  if (tok.empty()) return false;
  out = 0;
  for (char c : tok) {
    if (c < '0' || c > '9') return false;
    out = out * 10 + static_cast<std::uint64_t>(c - '0');
    if (out > 1'000'000'000) return false;
  }
  return true;
}

// Signed-term splitting shared by both DSLs: groups separated by '=' are
// normalized to pairwise differences group_k - group_{k+1}.
struct SignedTerm {
  bool negative = false;
  std::string body;
};

std::vector<std::vector<SignedTerm>> split_equality_groups(const std::vector<std::string>& tokens,
                                                           std::size_t start, std::size_t line) {
  std::vector<std::vector<SignedTerm>> groups(1);
  bool expect_term = true;
  bool negative = false;
  for (std::size_t k = start; k < tokens.size(); ++k) {
    const std::string& t = tokens[k];
    if (t == "=") {
      if (expect_term) parse_fail(line, "'=' without a preceding term");
      groups.emplace_back();
      expect_term = true;
      negative = false;
    } else if (t == "+" || t == "-") {
      if (!expect_term) {
        expect_term = true;
        negative = (t == "-");
      } else if (t == "-") {
        negative = !negative;
      }
    } else {
      if (!expect_term) parse_fail(line, "missing '+', '-' or '=' before '" + t + "'");
      groups.back().push_back({negative, t});
      expect_term = false;
      negative = false;
    }
  }
  if (expect_term) parse_fail(line, "relation ends without a term");
  for (const auto& g : groups)
    if (g.empty()) parse_fail(line, "empty side of '='");
  return groups;
}

// ---------------------------------------------------------------------------
// Sparse row echelon elimination over GF(p)
//
// Columns are totally ordered by index and the leading term of a row is its
// largest column, so elimination rewrites high columns into combinations of
// lower ones and the surviving non-pivot columns are the earliest (shortest)
// paths or monomials.
// ---------------------------------------------------------------------------

class SparseEliminator {
 public:
  using Row = std::vector<std::pair<std::size_t, std::uint32_t>>;  // ascending by column

  SparseEliminator(std::size_t ncols, std::uint32_t p) : p_(p), pivot_of_col_(ncols, kNone) {}

  // Reduces the row against the current pivots; stores it as a new pivot row
  // if it does not vanish.
  void insert(Row row) {
    reduce_inplace(row);
    if (row.empty()) return;
    std::uint32_t inv = fp_inv(row.back().second, p_);
    for (auto& [c, v] : row) v = fp_mul(v, inv, p_);
    pivot_of_col_[row.back().first] = rows_.size();
    rows_.push_back(std::move(row));
  }

  bool is_pivot(std::size_t col) const { return pivot_of_col_[col] != kNone; }
  std::size_t rank() const { return rows_.size(); }

  // Fully reduced normal form, supported on non-pivot columns only.
  Row normal_form(Row row) const {
    reduce_inplace(row);
    return row;
  }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  static Row merge_sub(const Row& a, std::uint32_t lambda, const Row& b, std::uint32_t p) {
    // a - lambda*b
    Row out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
        out.push_back(a[i++]);
      } else if (i == a.size() || b[j].first < a[i].first) {
        std::uint32_t v = fp_neg(fp_mul(lambda, b[j].second, p), p);
        if (v != 0) out.emplace_back(b[j].first, v);
        ++j;
      } else {
        std::uint32_t v = fp_sub(a[i].second, fp_mul(lambda, b[j].second, p), p);
        if (v != 0) out.emplace_back(a[i].first, v);
        ++i;
        ++j;
      }
    }
    return out;
  }

  void reduce_inplace(Row& row) const {
    // Eliminate pivot columns from the top down. Subtracting a pivot row only
    // introduces columns below its leading column, so one descending sweep
    // per elimination suffices.
    for (;;) {
      std::size_t hit = kNone;
      for (std::size_t k = row.size(); k-- > 0;) {
        if (pivot_of_col_[row[k].first] != kNone) {
          hit = k;
          break;
        }
      }
      if (hit == kNone) return;
      const Row& prow = rows_[pivot_of_col_[row[hit].first]];
      row = merge_sub(row, row[hit].second, prow, p_);
    }
  }

  std::uint32_t p_;
  std::vector<std::size_t> pivot_of_col_;
  std::vector<Row> rows_;
};

// ---------------------------------------------------------------------------
// Path enumeration
// ---------------------------------------------------------------------------

struct PathEntry {
  std::size_t src = 0;
  std::size_t tgt = 0;
  std::vector<std::size_t> word;  // arrow indices, left-to-right traversal
};

struct PathSet {
  std::vector<PathEntry> paths;                         // index = column, ordered by (length, discovery)
  std::vector<std::size_t> vertex_path;                 // vertex -> column of its trivial path
  std::map<std::vector<std::size_t>, std::size_t> by_word;  // nonempty words only
  std::vector<std::size_t> first_of_length;             // first column of each length

  std::size_t size() const { return paths.size(); }

  std::optional<std::size_t> lookup(const std::vector<std::size_t>& word, std::size_t src_if_empty) const {
    if (word.empty()) return vertex_path[src_if_empty];
    auto it = by_word.find(word);
    if (it == by_word.end()) return std::nullopt;
    return it->second;
  }
};

PathSet enumerate_paths(const QuiverSpec& q, std::uint32_t maxlen) {
  PathSet ps;
  ps.first_of_length.push_back(0);
  for (std::size_t v = 0; v < q.vertices.size(); ++v) {
    ps.vertex_path.push_back(ps.paths.size());
    ps.paths.push_back({v, v, {}});
  }
  std::size_t level_begin = 0, level_end = ps.paths.size();
  for (std::uint32_t len = 1; len <= maxlen; ++len) {
    ps.first_of_length.push_back(ps.paths.size());
    for (std::size_t k = level_begin; k < level_end; ++k) {
      PathEntry base = ps.paths[k];
      for (std::size_t a = 0; a < q.arrows.size(); ++a) {
        if (q.arrows[a].src != base.tgt) continue;
        PathEntry ext = base;
        ext.word.push_back(a);
        ext.tgt = q.arrows[a].tgt;
        ps.by_word.emplace(ext.word, ps.paths.size());
        ps.paths.push_back(std::move(ext));
      }
    }
    level_begin = level_end;
    level_end = ps.paths.size();
  }
  ps.first_of_length.push_back(ps.paths.size());
  return ps;
}

struct TruncatedBuild {
  PathSet paths;
  SparseEliminator elim;
  std::vector<std::size_t> basis_cols;  // non-pivot columns, ascending
};

TruncatedBuild build_quiver_at(const QuiverSpec& q, std::uint32_t maxlen) {
  PathSet ps = enumerate_paths(q, maxlen);
  SparseEliminator elim(ps.size(), q.p);

  // Ideal rows p*r*q for every relation r and all framing paths. The build
  // quotients by the relation ideal plus all paths longer than the
  // truncation, so terms sticking out of the truncation are dropped: they lie
  // in the length ideal already.
  for (const QuiverRelation& rel : q.relations) {
    std::size_t min_term_len = maxlen + 1;
    for (const QuiverRelationTerm& t : rel.terms) min_term_len = std::min(min_term_len, t.word.size());
    for (const PathEntry& left : ps.paths) {
      if (left.tgt != rel.src) continue;
      for (const PathEntry& right : ps.paths) {
        if (right.src != rel.tgt) continue;
        if (left.word.size() + min_term_len + right.word.size() > maxlen) continue;
        std::map<std::size_t, std::uint32_t> acc;
        for (const QuiverRelationTerm& t : rel.terms) {
          if (left.word.size() + t.word.size() + right.word.size() > maxlen) continue;
          std::vector<std::size_t> word = left.word;
          word.insert(word.end(), t.word.begin(), t.word.end());
          word.insert(word.end(), right.word.begin(), right.word.end());
          auto col = ps.lookup(word, left.src);
          if (!col) fail(errc::truncation_unstable, "internal: relation product escaped the path set");
          acc[*col] = fp_add(acc[*col], t.coeff, q.p);
        }
        SparseEliminator::Row row;
        for (auto& [c, v] : acc)
          if (v != 0) row.emplace_back(c, v);
        if (!row.empty()) elim.insert(std::move(row));
      }
    }
  }

  TruncatedBuild tb{std::move(ps), std::move(elim), {}};
  for (std::size_t c = 0; c < tb.paths.size(); ++c)
    if (!tb.elim.is_pivot(c)) tb.basis_cols.push_back(c);
  return tb;
}

FpVector normal_form_vector(const TruncatedBuild& tb, std::size_t col,
                            const std::unordered_map<std::size_t, std::size_t>& basis_index,
                            std::uint32_t p) {
  SparseEliminator::Row nf = tb.elim.normal_form({{col, 1}});
  FpVector v(basis_index.size(), 0);
  for (auto& [c, coeff] : nf) {
    auto it = basis_index.find(c);
    if (it == basis_index.end()) fail(errc::truncation_unstable, "internal: normal form hit a pivot column");
    v[it->second] = coeff % p;
  }
  return v;
}

std::string path_label(const QuiverSpec& q, const PathEntry& e) {
  if (e.word.empty()) return q.vertices[e.src];
  std::string out;
  for (std::size_t a : e.word) {
    if (!out.empty()) out += ".";
    out += q.arrows[a].name;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Monomial enumeration (commutative builds)
// ---------------------------------------------------------------------------

struct MonomialSet {
  std::size_t ngens = 0;
  std::uint32_t bound = 0;
  std::vector<std::vector<std::uint32_t>> monomials;  // index = column
  std::map<std::vector<std::uint32_t>, std::size_t> index;
};

MonomialSet enumerate_monomials(std::size_t ngens, std::uint32_t bound) {
  MonomialSet ms;
  ms.ngens = ngens;
  ms.bound = bound;
  std::vector<std::vector<std::uint32_t>> all;
  std::vector<std::uint32_t> cur(ngens, 0);
  for (;;) {
    all.push_back(cur);
    std::size_t k = 0;
    while (k < ngens && cur[k] == bound) {
      cur[k] = 0;
      ++k;
    }
    if (k == ngens) break;
    ++cur[k];
  }
  // order by total degree, then by later-generator exponents; the basis of a
  // stable build is then the lowest monomials
  std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) {
    std::uint32_t da = 0, db = 0;
    for (std::uint32_t e : a) da += e;
    for (std::uint32_t e : b) db += e;
    if (da != db) return da < db;
    for (std::size_t k = a.size(); k-- > 0;)
      if (a[k] != b[k]) return a[k] < b[k];
    return false;
  });
  ms.monomials = std::move(all);
  for (std::size_t i = 0; i < ms.monomials.size(); ++i) ms.index.emplace(ms.monomials[i], i);
  return ms;
}

std::string monomial_label(const PresentedCommSpec& s, const std::vector<std::uint32_t>& exps) {
  std::string out;
  for (std::size_t g = 0; g < exps.size(); ++g) {
    if (exps[g] == 0) continue;
    if (!out.empty()) out += "*";
    out += s.generators[g];
    if (exps[g] > 1) out += "^" + std::to_string(exps[g]);
  }
  return out.empty() ? "1" : out;
}

struct CommBuild {
  MonomialSet mons;
  SparseEliminator elim;
  std::vector<std::size_t> basis_cols;
};

CommBuild build_comm_at(const PresentedCommSpec& s, std::uint32_t bound) {
  MonomialSet ms = enumerate_monomials(s.generators.size(), bound);
  SparseEliminator elim(ms.monomials.size(), s.p);
  for (const CommRelation& rel : s.relations) {
    for (const auto& m : ms.monomials) {
      bool fits = true;
      for (const CommTerm& t : rel.terms) {
        for (std::size_t g = 0; g < m.size() && fits; ++g)
          if (m[g] + t.exps[g] > bound) fits = false;
        if (!fits) break;
      }
      if (!fits) continue;
      std::map<std::size_t, std::uint32_t> acc;
      for (const CommTerm& t : rel.terms) {
        std::vector<std::uint32_t> e = m;
        for (std::size_t g = 0; g < e.size(); ++g) e[g] += t.exps[g];
        std::size_t col = ms.index.at(e);
        acc[col] = fp_add(acc[col], t.coeff, s.p);
      }
      SparseEliminator::Row row;
      for (auto& [c, v] : acc)
        if (v != 0) row.emplace_back(c, v);
      if (!row.empty()) elim.insert(std::move(row));
    }
  }
  CommBuild cb{std::move(ms), std::move(elim), {}};
  for (std::size_t c = 0; c < cb.mons.monomials.size(); ++c)
    if (!cb.elim.is_pivot(c)) cb.basis_cols.push_back(c);
  return cb;
}

}  // namespace

// ---------------------------------------------------------------------------
// parse_quiver
// ---------------------------------------------------------------------------

QuiverSpec parse_quiver(std::string_view text) {
  QuiverSpec q;
  std::map<std::string, std::size_t> vertex_index;
  std::map<std::string, std::size_t> arrow_index;
  bool have_field = false, have_maxlen = false;

  auto parse_path = [&](const std::string& body, std::size_t line)
      -> std::pair<std::vector<std::size_t>, std::pair<std::size_t, std::size_t>> {
    std::vector<std::string> segs;
    std::string cur;
    for (char c : body) {
      if (c == '.') {
        segs.push_back(cur);
        cur.clear();
      } else {
        cur += c;
      }
    }
    segs.push_back(cur);
    std::vector<std::size_t> word;
    std::optional<std::size_t> src, tgt;
    for (const std::string& s : segs) {
      std::size_t seg_src, seg_tgt;
      if (auto it = arrow_index.find(s); it != arrow_index.end()) {
        seg_src = q.arrows[it->second].src;
        seg_tgt = q.arrows[it->second].tgt;
        word.push_back(it->second);
      } else if (auto vt = vertex_index.find(s); vt != vertex_index.end()) {
        seg_src = seg_tgt = vt->second;  // trivial path
      } else {
        fail(errc::unknown_label, "line " + std::to_string(line) + ": unknown label '" + s + "'");
      }
      if (tgt && *tgt != seg_src)
        fail(errc::non_composable_path, "line " + std::to_string(line) + ": path '" + body +
                                            "' is not composable at '" + s + "'");
      if (!src) src = seg_src;
      tgt = seg_tgt;
    }
    return {word, {*src, *tgt}};
  };

  for (const Line& ln : logical_lines(text)) {
    const auto& t = ln.tokens;
    if (t[0] == "field") {
      std::uint64_t p;
      if (t.size() != 2 || !parse_uint(t[1], p) || !is_prime(static_cast<std::uint32_t>(p)))
        parse_fail(ln.number, "expected 'field <prime>'");
      q.p = static_cast<std::uint32_t>(p);
      have_field = true;
    } else if (t[0] == "vertices") {
      if (t.size() < 2) parse_fail(ln.number, "expected at least one vertex");
      for (std::size_t k = 1; k < t.size(); ++k) {
        if (vertex_index.count(t[k])) parse_fail(ln.number, "duplicate vertex '" + t[k] + "'");
        vertex_index[t[k]] = q.vertices.size();
        q.vertices.push_back(t[k]);
      }
    } else if (t[0] == "arrow") {
      if (t.size() != 4) parse_fail(ln.number, "expected 'arrow <name> <src> <dst>'");
      if (arrow_index.count(t[1]) || vertex_index.count(t[1]))
        parse_fail(ln.number, "duplicate label '" + t[1] + "'");
      auto sv = vertex_index.find(t[2]);
      auto tv = vertex_index.find(t[3]);
      if (sv == vertex_index.end() || tv == vertex_index.end())
        fail(errc::unknown_label, "line " + std::to_string(ln.number) + ": unknown vertex in arrow '" + t[1] + "'");
      arrow_index[t[1]] = q.arrows.size();
      q.arrows.push_back({t[1], sv->second, tv->second});
    } else if (t[0] == "maxlen") {
      std::uint64_t l;
      if (t.size() != 2 || !parse_uint(t[1], l) || l == 0 || l > 12)
        parse_fail(ln.number, "expected 'maxlen <1..12>'");
      q.maxlen = static_cast<std::uint32_t>(l);
      have_maxlen = true;
    } else if (t[0] == "relation") {
      auto groups = split_equality_groups(t, 1, ln.number);
      // each group is a signed sum; '=' chains become pairwise differences
      struct ParsedGroup {
        std::vector<QuiverRelationTerm> terms;
        std::optional<std::pair<std::size_t, std::size_t>> ends;
        bool zero = true;
      };
      std::vector<ParsedGroup> parsed;
      for (const auto& g : groups) {
        ParsedGroup pg;
        for (const SignedTerm& st : g) {
          std::string body = st.body;
          std::uint32_t coeff = st.negative ? fp_neg(1, q.p) : 1;
          if (auto star = body.find('*'); star != std::string::npos) {
            std::uint64_t c;
            if (!parse_uint(body.substr(0, star), c)) parse_fail(ln.number, "bad coefficient in '" + body + "'");
            coeff = fp_mul(coeff, static_cast<std::uint32_t>(c % q.p), q.p);
            body = body.substr(star + 1);
          }
          std::uint64_t literal;
          if (parse_uint(body, literal)) {
            if (literal != 0) parse_fail(ln.number, "only the constant 0 may appear in quiver relations");
            continue;  // zero term contributes nothing
          }
          auto [word, ends] = parse_path(body, ln.number);
          if (pg.ends && *pg.ends != ends)
            fail(errc::non_composable_path,
                 "line " + std::to_string(ln.number) + ": relation terms are not parallel paths");
          pg.ends = ends;
          pg.zero = false;
          if (coeff != 0) pg.terms.push_back({coeff, std::move(word)});
        }
        parsed.push_back(std::move(pg));
      }
      auto emit = [&](const ParsedGroup& a, const ParsedGroup& b) {
        QuiverRelation rel;
        std::optional<std::pair<std::size_t, std::size_t>> ends;
        if (a.ends) ends = a.ends;
        if (b.ends) {
          if (ends && *ends != *b.ends)
            fail(errc::non_composable_path,
                 "line " + std::to_string(ln.number) + ": relation sides are not parallel paths");
          ends = b.ends;
        }
        if (!ends) parse_fail(ln.number, "relation has no path terms");
        rel.src = ends->first;
        rel.tgt = ends->second;
        rel.terms = a.terms;
        for (QuiverRelationTerm t2 : b.terms) {
          t2.coeff = fp_neg(t2.coeff, q.p);
          rel.terms.push_back(std::move(t2));
        }
        // collect duplicate words
        std::map<std::vector<std::size_t>, std::uint32_t> acc;
        for (const auto& term : rel.terms) acc[term.word] = fp_add(acc[term.word], term.coeff, q.p);
        rel.terms.clear();
        for (auto& [w, c] : acc)
          if (c != 0) rel.terms.push_back({c, w});
        if (rel.terms.empty()) return;  // trivially zero
        // admissibility: single kill of length >= 1, otherwise all terms of length >= 2
        if (rel.terms.size() == 1) {
          if (rel.terms[0].word.empty()) parse_fail(ln.number, "cannot set a trivial path to zero");
        } else {
          for (const auto& term : rel.terms)
            if (term.word.size() < 2)
              parse_fail(ln.number, "relation terms of length < 2 are only allowed as pure kills");
        }
        q.relations.push_back(std::move(rel));
      };
      if (groups.size() == 1) {
        emit(parsed[0], ParsedGroup{});
      } else {
        for (std::size_t k = 0; k + 1 < parsed.size(); ++k) emit(parsed[k], parsed[k + 1]);
      }
    } else {
      parse_fail(ln.number, "unknown directive '" + t[0] + "'");
    }
  }
  if (q.vertices.empty()) fail(errc::parse_error, "no vertices declared");
  (void)have_field;
  (void)have_maxlen;
  return q;
}

// ---------------------------------------------------------------------------
// build_path_algebra
// ---------------------------------------------------------------------------

BuiltQuiver build_path_algebra(const QuiverSpec& q) {
  std::uint32_t l = q.maxlen;
  TruncatedBuild at_l = build_quiver_at(q, l);
  TruncatedBuild at_l1 = build_quiver_at(q, l + 1);

  // stability: identical basis paths, and every path of full length l+1 lies
  // in the truncated ideal
  auto words_of = [](const TruncatedBuild& tb) {
    std::vector<std::vector<std::size_t>> ws;
    for (std::size_t c : tb.basis_cols) ws.push_back(tb.paths.paths[c].word);
    return ws;
  };
  if (words_of(at_l) != words_of(at_l1))
    fail(errc::truncation_unstable,
         "dimension changes between maxlen " + std::to_string(l) + " and " + std::to_string(l + 1) +
             "; raise maxlen or check that the quotient is finite-dimensional");
  std::size_t first_full = at_l1.paths.first_of_length[l + 1];
  for (std::size_t c = first_full; c < at_l1.paths.size(); ++c)
    if (!at_l1.elim.normal_form({{c, 1}}).empty())
      fail(errc::truncation_unstable, "a path of length " + std::to_string(l + 1) +
                                          " does not lie in the truncated ideal; raise maxlen");

  const TruncatedBuild& tb = at_l1;  // richer reduction set, same basis
  std::size_t dim = tb.basis_cols.size();
  std::size_t max_basis_len = 0;
  for (std::size_t c : tb.basis_cols) max_basis_len = std::max(max_basis_len, tb.paths.paths[c].word.size());
  if (2 * max_basis_len > l + 1)
    fail(errc::truncation_unstable, "basis paths too long for products at this truncation; raise maxlen");

  std::unordered_map<std::size_t, std::size_t> basis_index;
  for (std::size_t k = 0; k < dim; ++k) basis_index.emplace(tb.basis_cols[k], k);

  std::vector<FpVector> table(dim * dim, FpVector(dim, 0));
  for (std::size_t a = 0; a < dim; ++a) {
    const PathEntry& pa = tb.paths.paths[tb.basis_cols[a]];
    for (std::size_t b = 0; b < dim; ++b) {
      const PathEntry& pb = tb.paths.paths[tb.basis_cols[b]];
      if (pa.tgt != pb.src) continue;  // product is zero
      std::vector<std::size_t> word = pa.word;
      word.insert(word.end(), pb.word.begin(), pb.word.end());
      auto col = tb.paths.lookup(word, pa.src);
      if (!col) fail(errc::truncation_unstable, "internal: basis product escaped the path set");
      table[a * dim + b] = normal_form_vector(tb, *col, basis_index, q.p);
    }
  }

  FpVector unit(dim, 0);
  for (std::size_t v = 0; v < q.vertices.size(); ++v) {
    FpVector nf = normal_form_vector(tb, tb.paths.vertex_path[v], basis_index, q.p);
    vec_addmul(unit, 1, nf, q.p);
  }

  std::vector<std::string> labels;
  for (std::size_t c : tb.basis_cols) labels.push_back(path_label(q, tb.paths.paths[c]));

  BuiltQuiver out;
  out.alg = Algebra::create(dim, q.p, std::move(table), std::move(unit), std::move(labels));
  for (std::size_t v = 0; v < q.vertices.size(); ++v)
    out.vertex_elements.push_back(normal_form_vector(tb, tb.paths.vertex_path[v], basis_index, q.p));
  for (std::size_t a = 0; a < q.arrows.size(); ++a) {
    auto col = tb.paths.lookup({a}, 0);
    out.arrow_elements.push_back(normal_form_vector(tb, *col, basis_index, q.p));
  }

  // every relation must evaluate to zero in the built algebra
  for (const QuiverRelation& rel : q.relations) {
    FpVector sum(dim, 0);
    for (const QuiverRelationTerm& t : rel.terms) {
      FpVector prod = out.alg.unit;
      for (std::size_t a : t.word) prod = out.alg.mul(prod, out.arrow_elements[a]);
      vec_addmul(sum, t.coeff, prod, q.p);
    }
    if (!vec_is_zero(sum))
      fail(errc::truncation_unstable, "a relation does not evaluate to zero in the built algebra");
  }
  return out;
}

// ---------------------------------------------------------------------------
// parse_comm
// ---------------------------------------------------------------------------

PresentedCommSpec parse_comm(std::string_view text) {
  PresentedCommSpec s;
  std::map<std::string, std::size_t> gen_index;

  for (const Line& ln : logical_lines(text)) {
    const auto& t = ln.tokens;
    if (t[0] == "field") {
      std::uint64_t p;
      if (t.size() != 2 || !parse_uint(t[1], p) || !is_prime(static_cast<std::uint32_t>(p)))
        parse_fail(ln.number, "expected 'field <prime>'");
      s.p = static_cast<std::uint32_t>(p);
    } else if (t[0] == "generators") {
      if (t.size() < 2 || t.size() > 4) parse_fail(ln.number, "expected one to three generators");
      for (std::size_t k = 1; k < t.size(); ++k) {
        if (gen_index.count(t[k])) parse_fail(ln.number, "duplicate generator '" + t[k] + "'");
        gen_index[t[k]] = s.generators.size();
        s.generators.push_back(t[k]);
      }
    } else if (t[0] == "bound") {
      std::uint64_t b;
      if (t.size() != 2 || !parse_uint(t[1], b) || b == 0 || b > 16)
        parse_fail(ln.number, "expected 'bound <1..16>'");
      s.bound = static_cast<std::uint32_t>(b);
    } else if (t[0] == "relation") {
      if (s.generators.empty()) parse_fail(ln.number, "relation before generators");
      auto groups = split_equality_groups(t, 1, ln.number);
      auto parse_group = [&](const std::vector<SignedTerm>& g) {
        std::vector<CommTerm> terms;
        for (const SignedTerm& st : g) {
          CommTerm term;
          term.exps.assign(s.generators.size(), 0);
          term.coeff = st.negative ? fp_neg(1, s.p) : 1;
          std::string body = st.body;
          std::size_t pos = 0;
          while (pos < body.size()) {
            std::size_t star = body.find('*', pos);
            std::string factor = body.substr(pos, star == std::string::npos ? std::string::npos : star - pos);
            pos = star == std::string::npos ? body.size() : star + 1;
            if (factor.empty()) parse_fail(ln.number, "empty factor in '" + st.body + "'");
            std::uint64_t lit;
            if (parse_uint(factor, lit)) {
              term.coeff = fp_mul(term.coeff, static_cast<std::uint32_t>(lit % s.p), s.p);
              continue;
            }
            std::string name = factor;
            std::uint64_t exp = 1;
            if (auto caret = factor.find('^'); caret != std::string::npos) {
              name = factor.substr(0, caret);
              if (!parse_uint(factor.substr(caret + 1), exp) || exp == 0 || exp > 64)
                parse_fail(ln.number, "bad exponent in '" + factor + "'");
            }
            auto it = gen_index.find(name);
            if (it == gen_index.end())
              fail(errc::unknown_label, "line " + std::to_string(ln.number) + ": unknown generator '" + name + "'");
            term.exps[it->second] += static_cast<std::uint32_t>(exp);
          }
          terms.push_back(std::move(term));
        }
        return terms;
      };
      std::vector<std::vector<CommTerm>> parsed;
      for (const auto& g : groups) parsed.push_back(parse_group(g));
      auto emit = [&](const std::vector<CommTerm>& a, const std::vector<CommTerm>& b) {
        std::map<std::vector<std::uint32_t>, std::uint32_t> acc;
        for (const CommTerm& term : a) acc[term.exps] = fp_add(acc[term.exps], term.coeff, s.p);
        for (const CommTerm& term : b) acc[term.exps] = fp_sub(acc[term.exps], term.coeff, s.p);
        CommRelation rel;
        for (auto& [e, c] : acc)
          if (c != 0) rel.terms.push_back({c, e});
        if (!rel.terms.empty()) s.relations.push_back(std::move(rel));
      };
      if (parsed.size() == 1) {
        emit(parsed[0], {});
      } else {
        for (std::size_t k = 0; k + 1 < parsed.size(); ++k) emit(parsed[k], parsed[k + 1]);
      }
    } else {
      parse_fail(ln.number, "unknown directive '" + t[0] + "'");
    }
  }
  if (s.generators.empty()) fail(errc::parse_error, "no generators declared");
  return s;
}

// ---------------------------------------------------------------------------
// build_comm_presented
// ---------------------------------------------------------------------------

FpVector PresentedAlgebra::monomial(const std::vector<std::uint32_t>& exps) const {
  FpVector r = alg.unit;
  for (std::size_t g = 0; g < exps.size(); ++g)
    for (std::uint32_t k = 0; k < exps[g]; ++k) r = alg.mul(r, generators[g]);
  return r;
}

PresentedAlgebra build_comm_presented(const PresentedCommSpec& s) {
  std::uint32_t b = s.bound;
  CommBuild at_b = build_comm_at(s, b);
  CommBuild at_b1 = build_comm_at(s, b + 1);

  auto exps_of = [](const CommBuild& cb) {
    std::vector<std::vector<std::uint32_t>> es;
    for (std::size_t c : cb.basis_cols) es.push_back(cb.mons.monomials[c]);
    return es;
  };
  if (exps_of(at_b) != exps_of(at_b1))
    fail(errc::truncation_unstable, "dimension changes between bound " + std::to_string(b) + " and " +
                                        std::to_string(b + 1) + "; raise the bound");
  // every boundary monomial of the enlarged box must reduce into the interior
  for (std::size_t c = 0; c < at_b1.mons.monomials.size(); ++c) {
    const auto& m = at_b1.mons.monomials[c];
    bool boundary = std::any_of(m.begin(), m.end(), [&](std::uint32_t e) { return e == b + 1; });
    if (boundary && !at_b1.elim.is_pivot(c))
      fail(errc::truncation_unstable, "monomial " + monomial_label(s, m) + " escapes the bound; raise the bound");
  }

  const CommBuild& cb = at_b1;
  std::size_t dim = cb.basis_cols.size();
  std::uint32_t max_exp = 0;
  for (std::size_t c : cb.basis_cols)
    for (std::uint32_t e : cb.mons.monomials[c]) max_exp = std::max(max_exp, e);
  if (2 * max_exp > b + 1)
    fail(errc::truncation_unstable, "basis monomials too large for products at this bound; raise the bound");

  std::unordered_map<std::size_t, std::size_t> basis_index;
  for (std::size_t k = 0; k < dim; ++k) basis_index.emplace(cb.basis_cols[k], k);

  auto nf_vec = [&](std::size_t col) {
    SparseEliminator::Row nf = cb.elim.normal_form({{col, 1}});
    FpVector v(dim, 0);
    for (auto& [c, coeff] : nf) v[basis_index.at(c)] = coeff;
    return v;
  };

  std::vector<FpVector> table(dim * dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) {
      std::vector<std::uint32_t> e = cb.mons.monomials[cb.basis_cols[i]];
      const auto& f = cb.mons.monomials[cb.basis_cols[j]];
      for (std::size_t g = 0; g < e.size(); ++g) e[g] += f[g];
      table[i * dim + j] = nf_vec(cb.mons.index.at(e));
    }

  std::vector<std::string> labels;
  for (std::size_t c : cb.basis_cols) labels.push_back(monomial_label(s, cb.mons.monomials[c]));

  PresentedAlgebra out;
  out.spec = s;
  out.alg = Algebra::create(dim, s.p, std::move(table), nf_vec(cb.mons.index.at(std::vector<std::uint32_t>(s.generators.size(), 0))),
                            std::move(labels));
  if (!out.alg.is_commutative())
    fail(errc::truncation_unstable, "internal: commutative build produced a noncommutative table");
  for (std::size_t g = 0; g < s.generators.size(); ++g) {
    std::vector<std::uint32_t> e(s.generators.size(), 0);
    e[g] = 1;
    out.generators.push_back(nf_vec(cb.mons.index.at(e)));
  }
  // relations must evaluate to zero on the generator classes
  for (const CommRelation& rel : s.relations) {
    FpVector sum(dim, 0);
    for (const CommTerm& t : rel.terms) vec_addmul(sum, t.coeff, out.monomial(t.exps), s.p);
    if (!vec_is_zero(sum))
      fail(errc::truncation_unstable, "a relation does not evaluate to zero in the built algebra");
  }
  return out;
}

// ---------------------------------------------------------------------------
// The nine-dimensional candidate algebra
// ---------------------------------------------------------------------------

namespace {

constexpr std::string_view kAlgebraASource = R"(# Two vertices, arrows alpha: i->j and beta: j->i, loops gamma, delta at i.
# Path composition is left-to-right: a.b means "a, then b".
field 3
vertices i j
arrow alpha i j
arrow beta  j i
arrow gamma i i
arrow delta i i
maxlen 6
relation delta.delta = gamma.gamma.gamma
relation gamma.gamma.gamma = alpha.beta
relation delta.gamma = 0
relation gamma.delta = 0
relation delta.alpha = 0
relation gamma.alpha = 0
relation beta.delta = 0
relation beta.gamma = 0
)";

constexpr std::string_view kStableCenterSource = R"(# k[x,y]/(x^3 - y^2, x*y, y^3)
field 3
generators x y
bound 4
relation x^3 - y^2
relation x*y
relation y^3
)";

constexpr std::string_view kTruncatedPolySource = R"(# k[x,y]/(x^3, y^3)
field 3
generators x y
bound 4
relation x^3
relation y^3
)";

constexpr std::string_view kUniserialDim3Source = R"(# k[u]/(u^3)
field 3
generators u
bound 4
relation u^3
)";

}  // namespace

std::string_view algebra_A_source() { return kAlgebraASource; }
std::string_view stable_center_presentation_source() { return kStableCenterSource; }
std::string_view truncated_poly_source() { return kTruncatedPolySource; }
std::string_view uniserial_dim3_source() { return kUniserialDim3Source; }

AlgebraAHandles algebra_A(std::uint32_t p) {
  QuiverSpec q = parse_quiver(kAlgebraASource);
  q.p = p;
  BuiltQuiver built = build_path_algebra(q);
  AlgebraAHandles h;
  h.alg = std::move(built.alg);
  h.i = built.vertex_elements[0];
  h.j = built.vertex_elements[1];
  h.alpha = built.arrow_elements[0];
  h.beta = built.arrow_elements[1];
  h.gamma = built.arrow_elements[2];
  h.delta = built.arrow_elements[3];
  return h;
}

}  // namespace blocklab
