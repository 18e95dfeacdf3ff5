#include "ctc/ledger.hpp"

#include "ctc/json_io.hpp"
#include "ctc/matrix.hpp"

namespace ctc {

LedgerProblem LedgerProblem::from_json(const nlohmann::json& doc, const std::string& origin) {
  LedgerProblem p;
  try {
    if (doc.contains("field")) p.field = parse_field(doc.at("field"), origin);
    p.symbols = doc.at("symbols").get<std::vector<std::string>>();
    const std::set<std::string> known_symbols(p.symbols.begin(), p.symbols.end());
    if (known_symbols.size() != p.symbols.size()) raise(ErrorCode::ParseError, origin + ": duplicate symbol");
    const auto check = [&](const std::string& s) {
      if (!known_symbols.count(s)) raise(ErrorCode::ParseError, origin + ": unknown symbol '" + s + "'");
      return s;
    };
    for (const auto& r : doc.value("relations", nlohmann::json::array())) {
      LedgerRelation rel{check(r.at("lhs").get<std::string>()), {}};
      for (const auto& [sym, c] : r.at("rhs").items()) rel.rhs[check(sym)] = c.get<long>();
      p.relations.push_back(std::move(rel));
    }
    const auto knowns = doc.value("knowns", nlohmann::json::object());
    if (knowns.is_object()) {
      for (const auto& [sym, v] : knowns.items())
        p.knowns.emplace_back(check(sym), parse_literal(v, p.field, origin + " knowns[" + sym + "]"));
    } else {
      for (const auto& kv : knowns) {
        const auto sym = check(kv.at(0).get<std::string>());
        p.knowns.emplace_back(sym, parse_literal(kv.at(1), p.field, origin + " knowns[" + sym + "]"));
      }
    }
    for (const auto& s : doc.value("projectives", std::vector<std::string>{})) p.projectives.insert(check(s));
    for (const auto& s : doc.value("query", std::vector<std::string>{})) p.query.push_back(check(s));
  } catch (const nlohmann::json::exception& e) {
    raise(ErrorCode::ParseError, origin + ": " + e.what());
  }
  return p;
}

LedgerProblem LedgerProblem::load(const std::filesystem::path& path) {
  return from_json(read_json(path), path.string());
}

namespace {

struct Equation {
  std::vector<Scalar> row;
  Scalar rhs;
  std::string text;
};

std::string render(const LedgerRelation& r) {
  std::string out = "dim(" + r.lhs + ") =";
  bool first = true;
  for (const auto& [sym, c] : r.rhs) {
    out += first ? " " : " + ";
    if (c != 1) out += std::to_string(c) + "*";
    out += "dim(" + sym + ")";
    first = false;
  }
  return first ? out + " 0" : out;
}

}  // namespace

std::map<std::string, Scalar> solve_dims(const LedgerProblem& p) {
  const std::size_t n = p.symbols.size();
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index[p.symbols[i]] = i;
  const Scalar zero = Scalar::zero(p.field), one = Scalar::one(p.field);

  std::vector<Equation> eqs;
  for (const auto& r : p.relations) {
    Equation e{std::vector<Scalar>(n, zero), zero, render(r)};
    e.row[index.at(r.lhs)] += one;
    for (const auto& [sym, c] : r.rhs) e.row[index.at(sym)] -= Scalar::from_int(p.field, c);
    eqs.push_back(std::move(e));
  }
  for (const auto& [sym, v] : p.knowns) {
    Equation e{std::vector<Scalar>(n, zero), v, "dim(" + sym + ") = " + v.to_string()};
    e.row[index.at(sym)] = one;
    eqs.push_back(std::move(e));
  }
  for (const auto& sym : p.projectives) {
    Equation e{std::vector<Scalar>(n, zero), zero, "dim(" + sym + ") = 0 (projective)"};
    e.row[index.at(sym)] = one;
    eqs.push_back(std::move(e));
  }

  const auto system = [&](std::size_t count) {
    Matrix m(p.field, count, n), b(p.field, count, 1);
    for (std::size_t r = 0; r < count; ++r) {
      for (std::size_t c = 0; c < n; ++c) m(r, c) = eqs[r].row[c];
      b(r, 0) = eqs[r].rhs;
    }
    return solve_affine(m, b);
  };
  const auto sol = system(eqs.size());
  if (!sol.particular) {
    for (std::size_t k = 1; k <= eqs.size(); ++k)
      if (!system(k).particular) raise(ErrorCode::Inconsistent, "violated: " + eqs[k - 1].text);
  }

  const auto& query = p.query.empty() ? p.symbols : p.query;
  std::vector<std::string> free;
  std::map<std::string, Scalar> out;
  for (const auto& sym : query) {
    const std::size_t i = index.at(sym);
    bool determined = true;
    for (std::size_t c = 0; c < sol.kernel.cols(); ++c) determined = determined && sol.kernel(i, c).is_zero();
    if (determined)
      out.emplace(sym, (*sol.particular)(i, 0));
    else
      free.push_back(sym);
  }
  if (!free.empty()) {
    std::string list;
    for (const auto& s : free) list += (list.empty() ? "" : ", ") + s;
    raise(ErrorCode::Underdetermined, "free symbols: " + list);
  }
  return out;
}

}  // namespace ctc
