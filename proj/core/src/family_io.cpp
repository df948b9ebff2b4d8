/*
 * Copyright 2026 The permsum Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <set>
#include <sstream>
#include <string>

#include "permsum/errors.hpp"
#include "permsum/families.hpp"

namespace permsum {

namespace {

constexpr std::string_view kMagic = "permfam v1";

std::string_view trim_cr(std::string_view s) {
  while (!s.empty() && (s.back() == '\r' || s.back() == ' ')) s.remove_suffix(1);
  return s;
}

// Parses "<key>=<unsigned>" where the key must match.
std::uint64_t parse_field(std::string_view token, std::string_view key) {
  if (token.size() <= key.size() + 1 || token.substr(0, key.size()) != key ||
      token[key.size()] != '=') {
    throw ParseError("expected '" + std::string(key) + "=...', got '" +
                     std::string(token) + "'");
  }
  const std::string digits(token.substr(key.size() + 1));
  if (digits.find_first_not_of("0123456789") != std::string::npos ||
      digits.size() > 9) {
    throw ParseError("bad value for " + std::string(key) + ": '" + digits + "'");
  }
  return std::stoull(digits);
}

}  // namespace

void write_family(std::ostream& out, const Family& fam) {
  out << kMagic << '\n';
  out << "n=" << fam.n() << " prop=" << to_string(fam.prop())
      << " count=" << fam.size() << '\n';
  for (const auto& p : fam.members()) out << format_perm(p) << '\n';
}

std::string format_family(const Family& fam) {
  std::ostringstream out;
  write_family(out, fam);
  return out.str();
}

Family read_family(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || trim_cr(line) != kMagic) {
    throw ParseError("missing 'permfam v1' header");
  }
  if (!std::getline(in, line)) throw ParseError("missing parameter line");

  std::istringstream params{std::string(trim_cr(line))};
  std::string n_tok, prop_tok, count_tok, extra;
  if (!(params >> n_tok >> prop_tok >> count_tok) || (params >> extra)) {
    throw ParseError("parameter line must be 'n=<n> prop=<P> count=<m>'");
  }
  const auto n = parse_field(n_tok, "n");
  if (n < 2 || n > kMaxDegree) {
    throw ParseError("n = " + std::to_string(n) + " outside [2, 255]");
  }
  if (prop_tok.rfind("prop=", 0) != 0) throw ParseError("expected 'prop=...'");
  const auto prop = parse_property(std::string_view(prop_tok).substr(5));
  if (!prop) throw ParseError("unknown property '" + prop_tok.substr(5) + "'");
  const auto count = parse_field(count_tok, "count");

  Family fam(factorize(static_cast<std::uint32_t>(n)), *prop);
  std::set<Perm> seen;
  std::size_t line_no = 2;
  while (std::getline(in, line)) {
    ++line_no;
    const auto body = trim_cr(line);
    if (body.empty()) continue;
    if (fam.size() == count) {
      throw ParseError("more members than count=" + std::to_string(count));
    }
    Perm p = [&] {
      try {
        return parse_perm(body, static_cast<std::uint32_t>(n));
      } catch (const ParseError& e) {
        throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
      }
    }();
    if (!seen.insert(p).second) {
      throw ParseError("line " + std::to_string(line_no) +
                       ": duplicate member " + format_perm(p));
    }
    fam.add(std::move(p));
  }
  if (fam.size() != count) {
    throw ParseError("count=" + std::to_string(count) + " but " +
                     std::to_string(fam.size()) + " members present");
  }
  return fam;
}

Family parse_family(const std::string& text) {
  std::istringstream in(text);
  return read_family(in);
}

}  // namespace permsum
