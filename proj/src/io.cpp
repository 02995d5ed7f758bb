#include "smr/io.hpp"

#include <cstdio>
#include <sstream>

#include "smr/errors.hpp"

namespace smr {

namespace {

std::vector<std::string> split_on(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string current;
  for (char c : text) {
    if (c == sep) {
      out.push_back(current);
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  out.push_back(current);
  return out;
}

long parse_int(const std::string& token, const char* what) {
  std::size_t used = 0;
  long value = 0;
  try {
    value = std::stol(token, &used);
  } catch (const std::exception&) {
    throw InvalidInputError(std::string("expected an integer for ") + what + ", got '" + token + "'");
  }
  if (used != token.size()) {
    throw InvalidInputError(std::string("trailing characters after ") + what + " in '" + token + "'");
  }
  return value;
}

std::vector<std::vector<std::uint32_t>> parse_grid(const std::string& text, const char* what) {
  std::vector<std::vector<std::uint32_t>> rows;
  for (const std::string& row_text : split_on(text, ';')) {
    std::istringstream row_stream(row_text);
    std::vector<std::uint32_t> row;
    std::string token;
    while (row_stream >> token) {
      const long v = parse_int(token, what);
      if (v < 0) throw InvalidInputError(std::string(what) + " entries must be non-negative");
      row.push_back(static_cast<std::uint32_t>(v));
    }
    rows.push_back(std::move(row));
  }
  while (!rows.empty() && rows.back().empty()) rows.pop_back();
  if (rows.empty()) throw InvalidInputError(std::string("empty ") + what);
  const std::size_t n = rows.size();
  for (const auto& row : rows) {
    if (row.size() != n) {
      throw InvalidInputError(std::string(what) + " must be a square grid: expected " +
                              std::to_string(n) + " entries per row");
    }
  }
  return rows;
}

}  // namespace

std::vector<std::pair<int, int>> parse_pairs(const std::string& text) {
  std::vector<std::pair<int, int>> out;
  std::istringstream stream(text);
  std::string token;
  while (stream >> token) {
    const std::vector<std::string> parts = split_on(token, ',');
    if (parts.size() != 2) {
      throw InvalidInputError("expected a pair 'i,j', got '" + token + "'");
    }
    const long i = parse_int(parts[0], "pair index");
    const long j = parse_int(parts[1], "pair index");
    if (i < 1 || j < 1) throw InvalidInputError("pair indices are 1-based, got '" + token + "'");
    out.emplace_back(static_cast<int>(i - 1), static_cast<int>(j - 1));
  }
  return out;
}

Relation parse_relation_text(const std::string& text) {
  const std::size_t semi = text.find(';');
  if (semi == std::string::npos) {
    throw InvalidInputError("relation text must look like 'n; i,j i,j ...'");
  }
  std::string head = text.substr(0, semi);
  std::istringstream head_stream(head);
  std::string token;
  if (!(head_stream >> token)) throw InvalidInputError("relation text is missing the index count");
  const long n = parse_int(token, "index count");
  std::string rest;
  if (head_stream >> rest) throw InvalidInputError("relation text has extra tokens before ';'");
  return Relation::from_pairs(static_cast<int>(n), parse_pairs(text.substr(semi + 1)));
}

std::string relation_text(const Relation& r) {
  std::ostringstream out;
  out << r.n() << ";";
  for (auto [i, j] : r.pairs()) out << " " << (i + 1) << "," << (j + 1);
  return out.str();
}

Json relation_to_json(const Relation& r) {
  Json pairs = Json::array();
  for (auto [i, j] : r.pairs()) pairs.push_back({i + 1, j + 1});
  return Json{{"n", r.n()}, {"pairs", std::move(pairs)}};
}

Relation relation_from_json(const Json& j) {
  std::vector<std::pair<int, int>> pairs;
  for (const auto& p : j.at("pairs")) {
    pairs.emplace_back(p.at(0).get<int>() - 1, p.at(1).get<int>() - 1);
  }
  return Relation::from_pairs(j.at("n").get<int>(), pairs);
}

Matrix parse_matrix_text(const std::string& text, RingCtx ctx) {
  const auto rows = parse_grid(text, "matrix");
  const int n = static_cast<int>(rows.size());
  std::vector<std::uint32_t> entries;
  for (const auto& row : rows)
    for (std::uint32_t v : row) {
      if (v >= ctx.m) {
        throw InvalidInputError("matrix entry " + std::to_string(v) + " is not reduced mod " +
                                std::to_string(ctx.m));
      }
      entries.push_back(v);
    }
  return Matrix(n, ctx, entries);
}

std::string matrix_text(const Matrix& a) {
  std::ostringstream out;
  for (int i = 0; i < a.n(); ++i) {
    if (i) out << "; ";
    for (int j = 0; j < a.n(); ++j) {
      if (j) out << " ";
      out << a(i, j);
    }
  }
  return out.str();
}

Json matrix_to_json(const Matrix& a) {
  Json rows = Json::array();
  for (int i = 0; i < a.n(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < a.n(); ++j) row.push_back(a(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

IdealMatrix parse_imat_text(const std::string& text, RingCtx ctx) {
  const auto rows = parse_grid(text, "ideal matrix");
  const int n = static_cast<int>(rows.size());
  IdealMatrix u(n, ctx);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const std::uint32_t g = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      u.set_entry(i, j, canonical_ideal(g % ctx.m, ctx));
    }
  return u;
}

std::string imat_text(const IdealMatrix& u) {
  std::ostringstream out;
  for (int i = 0; i < u.n(); ++i) {
    if (i) out << "; ";
    for (int j = 0; j < u.n(); ++j) {
      if (j) out << " ";
      out << u.generator(i, j);
    }
  }
  return out.str();
}

Json imat_to_json(const IdealMatrix& u) {
  Json rows = Json::array();
  for (int i = 0; i < u.n(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < u.n(); ++j) row.push_back(u.generator(i, j));
    rows.push_back(std::move(row));
  }
  return Json{{"m", u.m()}, {"rows", std::move(rows)}};
}

IdealMatrix imat_from_json(const Json& j) {
  const RingCtx ctx(j.at("m").get<std::uint32_t>());
  const auto& rows = j.at("rows");
  const int n = static_cast<int>(rows.size());
  std::vector<std::uint32_t> gens;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != n) {
      throw InvalidInputError("ideal matrix JSON rows must form a square grid");
    }
    for (const auto& v : row) gens.push_back(v.get<std::uint32_t>());
  }
  return IdealMatrix(n, ctx, gens);
}

std::string ideal_text(const Ideal& ideal) {
  return "(" + std::to_string(ideal.g()) + ")";
}

Json subring_to_json(const SubringSet& s) {
  Json out{{"n", s.n()}, {"m", s.m()}, {"size", s.size()}};
  if (s.size() <= 4096) {
    Json members = Json::array();
    s.for_each_member([&](std::uint64_t code) { members.push_back(code); });
    out["members"] = std::move(members);
  } else {
    char buf[32];
    std::snprintf(buf, sizeof buf, "0x%016llx",
                  static_cast<unsigned long long>(s.fnv1a_digest()));
    out["members_fnv1a"] = buf;
  }
  return out;
}

}  // namespace smr
