#include "tropcram/io.hpp"

#include <fstream>
#include <sstream>

namespace tropcram {

namespace {

struct Tok {
  std::string text;
  int line, col;
};

std::vector<Tok> tokenize(std::istream& in) {
  std::vector<Tok> out;
  std::string linebuf;
  int lineno = 0;
  while (std::getline(in, linebuf)) {
    ++lineno;
    size_t i = 0;
    while (i < linebuf.size()) {
      if (std::isspace(static_cast<unsigned char>(linebuf[i]))) {
        ++i;
        continue;
      }
      if (linebuf[i] == '#') break;
      size_t start = i;
      while (i < linebuf.size() && !std::isspace(static_cast<unsigned char>(linebuf[i]))) ++i;
      out.push_back(Tok{linebuf.substr(start, i - start), lineno, static_cast<int>(start + 1)});
    }
  }
  return out;
}

int parse_count(const Tok& t) {
  try {
    size_t pos = 0;
    int v = std::stoi(t.text, &pos);
    if (pos != t.text.size() || v <= 0) throw std::invalid_argument("");
    return v;
  } catch (...) {
    throw ParseError("expected a positive dimension, got '" + t.text + "'", t.line, t.col);
  }
}

}  // namespace

MatrixFile read_matrix_file(std::istream& in, const std::string& display_name) {
  std::vector<Tok> toks = tokenize(in);
  size_t k = 0;
  auto need = [&](const char* what) -> const Tok& {
    if (k >= toks.size())
      throw ParseError(std::string("unexpected end of ") + display_name + ", expected " + what,
                       toks.empty() ? 1 : toks.back().line, 1);
    return toks[k++];
  };
  const Tok& kw = need("'semiring'");
  if (kw.text != "semiring")
    throw ParseError("expected 'semiring' header, got '" + kw.text + "'", kw.line, kw.col);
  MatrixFile f;
  f.semiring_name = need("a semiring name").text;
  f.rows = parse_count(need("row count"));
  f.cols = parse_count(need("column count"));
  size_t want = static_cast<size_t>(f.rows) * f.cols;
  f.tokens.reserve(want);
  while (k < toks.size()) f.tokens.push_back(toks[k++].text);
  if (f.tokens.size() != want) {
    const Tok& t = toks.back();
    throw ParseError("expected " + std::to_string(want) + " entries, found " +
                         std::to_string(f.tokens.size()),
                     t.line, t.col);
  }
  return f;
}

MatrixFile read_matrix_file_path(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return read_matrix_file(in, path);
}

Mat to_mat(const MatrixFile& f) {
  auto s = Semiring::by_name(f.semiring_name);
  if (!s) throw std::runtime_error("unknown semiring '" + f.semiring_name + "'");
  Mat M(*s, f.rows, f.cols);
  for (size_t i = 0; i < f.tokens.size(); ++i) M.a[i] = s->parse(f.tokens[i]);
  return M;
}

MpMat to_mpmat(const MatrixFile& f) {
  if (f.semiring_name != "rmax")
    throw std::runtime_error("expected an rmax matrix, got semiring '" + f.semiring_name + "'");
  MpMat M(f.rows, f.cols);
  for (size_t i = 0; i < f.tokens.size(); ++i) M.a[i] = MaxPlus::parse(f.tokens[i]);
  return M;
}

std::vector<Elem> to_vec(const MatrixFile& f, Semiring* out_s) {
  if (f.rows != 1 && f.cols != 1)
    throw std::runtime_error("expected a vector (one row or one column), got " +
                             std::to_string(f.rows) + "x" + std::to_string(f.cols));
  Mat M = to_mat(f);
  if (out_s) *out_s = M.S;
  return M.a;
}

std::vector<MaxPlus> to_mpvec(const MatrixFile& f) {
  if (f.rows != 1 && f.cols != 1)
    throw std::runtime_error("expected a vector (one row or one column), got " +
                             std::to_string(f.rows) + "x" + std::to_string(f.cols));
  return to_mpmat(f).a;
}

std::string format_matrix(const Mat& A) {
  std::ostringstream os;
  os << "semiring " << A.S.name() << "\n" << A.rows << " " << A.cols << "\n";
  for (int i = 0; i < A.rows; ++i) {
    for (int j = 0; j < A.cols; ++j) os << (j ? " " : "") << A.S.print(A.at(i, j));
    os << "\n";
  }
  return os.str();
}

std::string format_mpmat(const MpMat& A) {
  std::ostringstream os;
  os << "semiring rmax\n" << A.rows << " " << A.cols << "\n";
  for (int i = 0; i < A.rows; ++i) {
    for (int j = 0; j < A.cols; ++j) os << (j ? " " : "") << A.at(i, j).to_string();
    os << "\n";
  }
  return os.str();
}

std::string format_vec(const Semiring& S, const std::vector<Elem>& x) {
  std::ostringstream os;
  os << "semiring " << S.name() << "\n" << x.size() << " 1\n";
  for (const Elem& e : x) os << S.print(e) << "\n";
  return os.str();
}

std::string format_mpvec(const std::vector<MaxPlus>& x) {
  std::ostringstream os;
  os << "semiring rmax\n" << x.size() << " 1\n";
  for (const MaxPlus& e : x) os << e.to_string() << "\n";
  return os.str();
}

std::string format_tokens(const Semiring& S, const std::vector<Elem>& x) {
  std::ostringstream os;
  for (size_t i = 0; i < x.size(); ++i) os << (i ? " " : "") << S.print(x[i]);
  return os.str();
}

std::string format_mp_tokens(const std::vector<MaxPlus>& x) {
  std::ostringstream os;
  for (size_t i = 0; i < x.size(); ++i) os << (i ? " " : "") << x[i].to_string();
  return os.str();
}

}  // namespace tropcram
