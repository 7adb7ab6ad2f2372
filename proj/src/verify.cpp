// Certificate verifier. Everything here is written against Rat directly and
// avoids the library's elimination, closure and polynomial code on purpose:
// a certificate must not be confirmed by the routine that produced it.
#include "algforge/certificate.hpp"

#include <cctype>
#include <sstream>

namespace algforge {

const CertValue* Certificate::input(std::string_view name) const {
  for (const auto& [k, v] : inputs)
    if (k == name) return &v;
  return nullptr;
}

namespace {

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// --- linear algebra -------------------------------------------------------

// Echelon (not reduced) row set with explicit pivots; used for spans.
struct Span {
  Index n = 0;  // matrices are n x n
  std::vector<std::vector<Rat>> rows;
  std::vector<std::size_t> pivots;

  std::vector<Rat> flatten(const Mat& m) const {
    if (m.rows() != n || m.cols() != n) throw Failure("matrix size does not match the algebra");
    std::vector<Rat> v;
    v.reserve(static_cast<std::size_t>(n * n));
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j) v.push_back(m(i, j));
    return v;
  }
  std::vector<Rat> residue(std::vector<Rat> v) const {
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const std::size_t p = pivots[r];
      if (v[p].is_zero()) continue;
      const Rat f = v[p] / rows[r][p];
      for (std::size_t j = p; j < v.size(); ++j) v[j] -= f * rows[r][j];
    }
    return v;
  }
  bool contains(const Mat& m) const {
    for (const auto& x : residue(flatten(m)))
      if (!x.is_zero()) return false;
    return true;
  }
  bool add(const Mat& m) {
    auto v = residue(flatten(m));
    std::size_t p = 0;
    while (p < v.size() && v[p].is_zero()) ++p;
    if (p == v.size()) return false;
    rows.push_back(std::move(v));
    pivots.push_back(p);
    return true;
  }
  Index dim() const { return static_cast<Index>(rows.size()); }
  Mat element(std::size_t r) const {
    Mat m(n, n);
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j) m(i, j) = rows[r][static_cast<std::size_t>(i * n + j)];
    return m;
  }
  std::vector<Mat> elements() const {
    std::vector<Mat> out;
    for (std::size_t r = 0; r < rows.size(); ++r) out.push_back(element(r));
    return out;
  }
};

bool same_space(const Span& a, const Span& b) {
  if (a.n != b.n || a.dim() != b.dim()) return false;
  for (const auto& x : b.elements())
    if (!a.contains(x)) return false;
  return true;
}

// Null space basis by Gauss-Jordan on a copy.
std::vector<std::vector<Rat>> null_space(Mat a) {
  const Index rows = a.rows(), cols = a.cols();
  std::vector<Index> pivot_col;
  Index r = 0;
  for (Index c = 0; c < cols && r < rows; ++c) {
    Index p = r;
    while (p < rows && a(p, c).is_zero()) ++p;
    if (p == rows) continue;
    a.row(p).swap(a.row(r));
    const Rat inv = Rat(1) / a(r, c);
    for (Index j = 0; j < cols; ++j) a(r, j) *= inv;
    for (Index i = 0; i < rows; ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      const Rat f = a(i, c);
      for (Index j = 0; j < cols; ++j) a(i, j) -= f * a(r, j);
    }
    pivot_col.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (Index c : pivot_col) is_pivot[static_cast<std::size_t>(c)] = true;
  std::vector<std::vector<Rat>> out;
  for (Index f = 0; f < cols; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    std::vector<Rat> v(static_cast<std::size_t>(cols), Rat(0));
    v[static_cast<std::size_t>(f)] = Rat(1);
    for (std::size_t k = 0; k < pivot_col.size(); ++k)
      v[static_cast<std::size_t>(pivot_col[k])] = -a(static_cast<Index>(k), f);
    out.push_back(std::move(v));
  }
  return out;
}

Mat invert(const Mat& c) {
  const Index n = c.rows();
  if (c.cols() != n) throw Failure("transformation is not square");
  Mat a(n, 2 * n);
  a << c, Mat::Identity(n, n);
  for (Index k = 0; k < n; ++k) {
    Index p = k;
    while (p < n && a(p, k).is_zero()) ++p;
    if (p == n) throw Failure("transformation is singular");
    a.row(p).swap(a.row(k));
    const Rat inv = Rat(1) / a(k, k);
    a.row(k) *= inv;
    for (Index i = 0; i < n; ++i) {
      if (i == k || a(i, k).is_zero()) continue;
      const Rat f = a(i, k);
      a.row(i) -= f * a.row(k);
    }
  }
  return a.rightCols(n);
}

Span closure(Index n, const std::vector<Mat>& gens) {
  Span s;
  s.n = n;
  s.add(Mat::Identity(n, n));
  for (const auto& g : gens) s.add(g);
  for (bool grew = true; grew;) {
    grew = false;
    const auto elems = s.elements();
    for (const auto& x : elems)
      for (const auto& y : elems)
        if (s.add(x * y)) grew = true;
  }
  return s;
}

// --- polynomials as coefficient vectors, ascending ------------------------

using Coeffs = std::vector<Rat>;

void trim(Coeffs& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

Coeffs poly_rem(Coeffs p, const Coeffs& q) {
  trim(p);
  while (p.size() >= q.size() && !p.empty()) {
    const Rat f = p.back() / q.back();
    const std::size_t shift = p.size() - q.size();
    for (std::size_t i = 0; i < q.size(); ++i) p[shift + i] -= f * q[i];
    trim(p);
  }
  return p;
}

Coeffs poly_quot(Coeffs p, const Coeffs& q) {
  trim(p);
  if (p.size() < q.size()) return {};
  Coeffs out(p.size() - q.size() + 1, Rat(0));
  while (p.size() >= q.size() && !p.empty()) {
    const Rat f = p.back() / q.back();
    const std::size_t shift = p.size() - q.size();
    out[shift] = f;
    for (std::size_t i = 0; i < q.size(); ++i) p[shift + i] -= f * q[i];
    trim(p);
  }
  trim(out);
  return out;
}

Coeffs poly_gcd(Coeffs a, Coeffs b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Coeffs r = poly_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

Coeffs derivative(const Coeffs& p) {
  Coeffs d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Rat(static_cast<long>(i)));
  trim(d);
  return d;
}

// det(xI - A) by Faddeev-LeVerrier.
Coeffs characteristic(const Mat& a) {
  const Index n = a.rows();
  Coeffs c(static_cast<std::size_t>(n + 1), Rat(0));
  c[static_cast<std::size_t>(n)] = Rat(1);
  Mat m = Mat::Zero(n, n);
  for (Index k = 1; k <= n; ++k) {
    m = (a * m).eval();
    for (Index i = 0; i < n; ++i) m(i, i) += c[static_cast<std::size_t>(n - k + 1)];
    c[static_cast<std::size_t>(n - k)] = -(a * m).trace() / Rat(static_cast<long>(k));
  }
  return c;
}

int real_roots_sturm(Coeffs p) {
  trim(p);
  if (p.size() <= 1) return 0;
  std::vector<Coeffs> chain{p, derivative(p)};
  while (chain.back().size() > 1) {
    Coeffs r = poly_rem(chain[chain.size() - 2], chain.back());
    if (r.empty()) break;
    for (auto& x : r) x = -x;
    chain.push_back(std::move(r));
  }
  auto variations = [&](bool plus_inf) {
    int v = 0, last = 0;
    for (const auto& q : chain) {
      int s = q.back().sign();
      if (!plus_inf && (q.size() - 1) % 2 == 1) s = -s;
      if (s == 0) continue;
      if (last != 0 && s != last) ++v;
      last = s;
    }
    return v;
  };
  return variations(false) - variations(true);
}

bool simple_real_eigenvalue(const Mat& a) {
  const Coeffs p = characteristic(a);
  const Coeffs g = poly_gcd(p, derivative(p));
  const Coeffs sqf = poly_quot(p, g);
  Coeffs repeated{Rat(1)};
  if (g.size() > 1) repeated = poly_quot(g, poly_gcd(g, derivative(g)));
  return real_roots_sturm(poly_quot(sqf, repeated)) > 0;
}

// --- reference language ----------------------------------------------------

struct Node {
  std::string head;
  bool call = false;
  std::vector<Node> args;
};

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}
  Node parse() {
    Node n = expr();
    ws();
    if (pos_ != s_.size()) throw Failure("trailing characters in reference '" + std::string(s_) + "'");
    return n;
  }

 private:
  void ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  Node expr() {
    ws();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_' ||
                                s_[pos_] == '.' || s_[pos_] == '[' || s_[pos_] == ']')) {
      ++pos_;
    }
    if (start == pos_) throw Failure("malformed reference '" + std::string(s_) + "'");
    Node n{std::string(s_.substr(start, pos_ - start)), false, {}};
    ws();
    if (pos_ < s_.size() && s_[pos_] == '(') {
      ++pos_;
      n.call = true;
      for (;;) {
        n.args.push_back(expr());
        ws();
        if (pos_ < s_.size() && s_[pos_] == ',') {
          ++pos_;
          continue;
        }
        if (pos_ < s_.size() && s_[pos_] == ')') {
          ++pos_;
          break;
        }
        throw Failure("unbalanced reference '" + std::string(s_) + "'");
      }
    }
    return n;
  }
  std::string_view s_;
  std::size_t pos_ = 0;
};

struct Value {
  enum class Kind { matrix, list, space, pattern };
  Kind kind = Kind::matrix;
  Mat m;
  std::vector<Mat> list;
  Span space;
  const IncidencePattern* pat = nullptr;
};

class Evaluator {
 public:
  explicit Evaluator(const Certificate& c) : cert_(c) {}

  Value eval(const std::string& ref) { return eval(Parser(ref).parse()); }

  Mat matrix(const std::string& ref) {
    Value v = eval(ref);
    if (v.kind != Value::Kind::matrix) throw Failure("'" + ref + "' is not a matrix");
    return v.m;
  }
  Span space(const std::string& ref) {
    Value v = eval(ref);
    if (v.kind != Value::Kind::space) throw Failure("'" + ref + "' is not an algebra");
    return v.space;
  }

 private:
  const Mat& transform() {
    if (!cert_.c) throw Failure("certificate has no transformation C");
    if (!c_inv_) c_inv_ = invert(*cert_.c);
    return *cert_.c;
  }

  Value eval(const Node& n) {
    if (!n.call) return leaf(n.head);
    const auto& f = n.head;
    auto arity = [&](std::size_t k) {
      if (n.args.size() != k) throw Failure(f + "(...) takes " + std::to_string(k) + " argument(s)");
    };
    if (f == "conj") {
      arity(1);
      Value v = eval(n.args[0]);
      const Mat& c = transform();
      Value out;
      out.kind = v.kind;
      if (v.kind == Value::Kind::matrix) {
        out.m = *c_inv_ * v.m * c;
      } else if (v.kind == Value::Kind::list) {
        for (const auto& x : v.list) out.list.push_back(*c_inv_ * x * c);
      } else if (v.kind == Value::Kind::space) {
        out.space.n = v.space.n;
        for (const auto& x : v.space.elements()) out.space.add(*c_inv_ * x * c);
      } else {
        throw Failure("conj of a pattern");
      }
      return out;
    }
    if (f == "gen") {
      arity(1);
      Value v = eval(n.args[0]);
      std::vector<Mat> gens;
      if (v.kind == Value::Kind::matrix) gens.push_back(v.m);
      else if (v.kind == Value::Kind::list) gens = v.list;
      else throw Failure("gen() needs a matrix or a list");
      Value out;
      out.kind = Value::Kind::space;
      const Index size = gens.empty() ? 0 : gens.front().rows();
      if (gens.empty()) throw Failure("gen() of an empty list has no size");
      out.space = closure(size, gens);
      return out;
    }
    if (f == "alg") {
      arity(1);
      const auto* v = named(n.args[0]);
      const auto* a = std::get_if<Algebra>(v);
      if (!a) throw Failure("alg() needs an algebra input");
      Value out;
      out.kind = Value::Kind::space;
      out.space.n = a->n();
      for (const auto& b : a->basis()) out.space.add(b);
      return out;
    }
    if (f == "units") {
      arity(1);
      const auto* p = std::get_if<IncidencePattern>(named(n.args[0]));
      if (!p) throw Failure("units() needs a pattern input");
      Value out;
      out.kind = Value::Kind::space;
      out.space.n = p->n();
      for (const auto& [i, j] : p->positions()) {
        Mat e = Mat::Zero(p->n(), p->n());
        e(i, j) = Rat(1);
        out.space.add(e);
      }
      return out;
    }
    if (f == "centralizer") {
      arity(1);
      const Mat m = as_matrix(eval(n.args[0]), f);
      const Index k = m.rows();
      Mat sys = Mat::Zero(k * k, k * k);
      for (Index i = 0; i < k; ++i)
        for (Index j = 0; j < k; ++j)
          for (Index t = 0; t < k; ++t) {
            sys(i * k + j, t * k + j) += m(i, t);  // (M X)_ij
            sys(i * k + j, i * k + t) -= m(t, j);  // (X M)_ij
          }
      Value out;
      out.kind = Value::Kind::space;
      out.space.n = k;
      for (const auto& v : null_space(sys)) {
        Mat x(k, k);
        for (Index i = 0; i < k; ++i)
          for (Index j = 0; j < k; ++j) x(i, j) = v[static_cast<std::size_t>(i * k + j)];
        out.space.add(x);
      }
      return out;
    }
    if (f == "sum") {
      arity(2);
      Value a = eval(n.args[0]), b = eval(n.args[1]);
      if (a.kind != Value::Kind::space || b.kind != Value::Kind::space) throw Failure("sum() needs two algebras");
      const Index n1 = a.space.n, n2 = b.space.n;
      Value out;
      out.kind = Value::Kind::space;
      out.space.n = n1 + n2;
      for (const auto& x : a.space.elements()) {
        Mat m = Mat::Zero(n1 + n2, n1 + n2);
        m.topLeftCorner(n1, n1) = x;
        out.space.add(m);
      }
      for (const auto& y : b.space.elements()) {
        Mat m = Mat::Zero(n1 + n2, n1 + n2);
        m.bottomRightCorner(n2, n2) = y;
        out.space.add(m);
      }
      return out;
    }
    if (f == "dsum") {
      arity(2);
      const Mat a = as_matrix(eval(n.args[0]), f), b = as_matrix(eval(n.args[1]), f);
      Value out;
      out.m = Mat::Zero(a.rows() + b.rows(), a.cols() + b.cols());
      out.m.topLeftCorner(a.rows(), a.cols()) = a;
      out.m.bottomRightCorner(b.rows(), b.cols()) = b;
      return out;
    }
    if (f == "zero") {
      arity(1);
      if (n.args[0].call) throw Failure("zero() takes a size");
      const long k = std::stol(n.args[0].head);
      if (k < 0) throw Failure("zero() size must be nonnegative");
      Value out;
      out.m = Mat::Zero(k, k);
      return out;
    }
    throw Failure("unknown function '" + f + "'");
  }

  static Mat as_matrix(const Value& v, const std::string& f) {
    if (v.kind != Value::Kind::matrix) throw Failure(f + "() needs a matrix");
    return v.m;
  }

  const CertValue* named(const Node& n) {
    if (n.call || n.head.rfind("in.", 0) != 0) throw Failure("expected an input reference, got '" + n.head + "'");
    const auto* v = cert_.input(n.head.substr(3));
    if (!v) throw Failure("unknown input '" + n.head + "'");
    return v;
  }

  Value leaf(const std::string& t) {
    Value out;
    if (t == "C") {
      out.m = transform();
      return out;
    }
    if (t == "out") {
      out.kind = Value::Kind::list;
      out.list = cert_.outputs;
      return out;
    }
    if (t.rfind("out[", 0) == 0 && t.back() == ']') {
      const std::size_t i = std::stoul(t.substr(4, t.size() - 5));
      if (i >= cert_.outputs.size()) throw Failure("output index out of range: " + t);
      out.m = cert_.outputs[i];
      return out;
    }
    if (t.rfind("in.", 0) == 0) {
      const auto* v = named(Node{t, false, {}});
      if (const auto* m = std::get_if<Mat>(v)) {
        out.m = *m;
      } else if (const auto* l = std::get_if<std::vector<Mat>>(v)) {
        out.kind = Value::Kind::list;
        out.list = *l;
      } else if (const auto* p = std::get_if<IncidencePattern>(v)) {
        out.kind = Value::Kind::pattern;
        out.pat = p;
      } else {
        throw Failure("algebra input '" + t + "' must be referenced as alg(" + t + ")");
      }
      return out;
    }
    throw Failure("unknown reference '" + t + "'");
  }

  const Certificate& cert_;
  std::optional<Mat> c_inv_;
};

// --- property checks --------------------------------------------------------

std::string arg(const Json& a, const char* key) {
  if (!a.contains(key) || !a[key].is_string()) throw Failure(std::string("missing string argument '") + key + "'");
  return a[key].get<std::string>();
}

long int_arg(const Json& a, const char* key) {
  if (!a.contains(key) || !a[key].is_number_integer()) {
    throw Failure(std::string("missing integer argument '") + key + "'");
  }
  return a[key].get<long>();
}

bool all_entries(const Mat& m, int min_sign) {
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j)
      if (m(i, j).sign() < min_sign) return false;
  return true;
}

void expect(bool cond, const std::string& what) {
  if (!cond) throw Failure(what);
}

void check(const Property& p, Evaluator& ev) {
  const auto& a = p.args;
  const auto& k = p.kind;
  if (k == "nonneg") {
    expect(all_entries(ev.matrix(arg(a, "of")), 0), arg(a, "of") + " has a negative entry");
  } else if (k == "positive") {
    expect(all_entries(ev.matrix(arg(a, "of")), 1), arg(a, "of") + " has a nonpositive entry");
  } else if (k == "upper_triangular") {
    const Mat m = ev.matrix(arg(a, "of"));
    for (Index i = 0; i < m.rows(); ++i)
      for (Index j = 0; j < i && j < m.cols(); ++j) expect(m(i, j).is_zero(), arg(a, "of") + " is not upper triangular");
  } else if (k == "simple_real_eigenvalue") {
    const Mat m = ev.matrix(arg(a, "of"));
    expect(m.rows() == m.cols(), "not square");
    expect(simple_real_eigenvalue(m), arg(a, "of") + " has no simple real eigenvalue");
  } else if (k == "member" || k == "covering" || k == "central") {
    const Mat m = ev.matrix(arg(a, "of"));
    const Span s = ev.space(arg(a, "in"));
    expect(s.contains(m), arg(a, "of") + " is not in " + arg(a, "in"));
    if (k == "covering") {
      for (Index i = 0; i < m.rows(); ++i)
        for (Index j = 0; j < m.cols(); ++j) {
          if (!m(i, j).is_zero()) continue;
          for (const auto& row : s.rows)
            expect(row[static_cast<std::size_t>(i * m.cols() + j)].is_zero(),
                   arg(a, "of") + " misses position (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
        }
    }
    if (k == "central") {
      for (const auto& x : s.elements()) expect(m * x == x * m, arg(a, "of") + " is not central");
    }
  } else if (k == "equals") {
    const Mat l = ev.matrix(arg(a, "lhs")), r = ev.matrix(arg(a, "rhs"));
    expect(l.rows() == r.rows() && l.cols() == r.cols() && l == r, arg(a, "lhs") + " != " + arg(a, "rhs"));
  } else if (k == "commutes") {
    const Mat x = ev.matrix(arg(a, "a")), y = ev.matrix(arg(a, "b"));
    expect(x * y == y * x, "matrices do not commute");
  } else if (k == "semi_commuting") {
    const Mat x = ev.matrix(arg(a, "a")), y = ev.matrix(arg(a, "b"));
    const Mat c = x * y - y * x;
    const std::string sign = arg(a, "sign");
    if (sign == "nonneg") expect(all_entries(c, 0), "commutator has a negative entry");
    else if (sign == "nonpos") expect(all_entries(-c, 0), "commutator has a positive entry");
    else throw Failure("sign must be nonneg or nonpos");
  } else if (k == "dimension") {
    const Span s = ev.space(arg(a, "of"));
    expect(s.dim() == int_arg(a, "equals"),
           "dimension is " + std::to_string(s.dim()) + ", expected " + std::to_string(int_arg(a, "equals")));
  } else if (k == "generation_equal") {
    expect(same_space(ev.space(arg(a, "lhs")), ev.space(arg(a, "rhs"))), arg(a, "lhs") + " != " + arg(a, "rhs"));
  } else if (k == "cardinality") {
    const Value v = ev.eval(arg(a, "of"));
    expect(v.kind == Value::Kind::list, "cardinality needs a list");
    expect(static_cast<long>(v.list.size()) == int_arg(a, "equals"), "wrong number of matrices");
  } else if (k == "incidence_pattern") {
    const Value v = ev.eval(arg(a, "of"));
    expect(v.kind == Value::Kind::pattern, "incidence_pattern needs a pattern input");
    const auto& pos = v.pat->positions();
    const Index n = v.pat->n();
    for (Index i = 0; i < n; ++i) expect(pos.count({i, i}) == 1, "pattern is not reflexive");
    for (const auto& [i, j] : pos) {
      expect(i == j || pos.count({j, i}) == 0, "pattern is not antisymmetric");
      for (const auto& [j2, t] : pos)
        if (j2 == j) expect(pos.count({i, t}) == 1, "pattern is not transitive");
    }
    expect(static_cast<long>(pos.size()) == int_arg(a, "size"), "pattern has the wrong size");
  } else {
    throw Failure("unknown property kind '" + k + "'");
  }
}

}  // namespace

VerifyResult verify(const Certificate& cert) {
  Evaluator ev(cert);
  for (std::size_t i = 0; i < cert.properties.size(); ++i) {
    const auto& p = cert.properties[i];
    try {
      check(p, ev);
    } catch (const std::exception& e) {
      return VerifyResult{false, i, p.kind, e.what()};
    }
  }
  return VerifyResult{};
}

void require_verified(const Certificate& cert) {
  const auto r = verify(cert);
  if (!r.ok) {
    throw std::logic_error(cert.claim + ": postcondition failed: property " + std::to_string(r.index) + " (" + r.kind +
                           "): " + r.message);
  }
}

}  // namespace algforge
