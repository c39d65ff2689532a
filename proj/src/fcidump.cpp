// Copyright 2026 The qrex authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qrex/fcidump.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "qrex/errors.hpp"

namespace qrex {

namespace {

std::string to_upper(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::toupper(c); });
  return s;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

// Fortran floats may carry D exponents (1.5D-03).
double parse_value(const std::string& token, int line) {
  std::string t = token;
  for (char& c : t) {
    if (c == 'D' || c == 'd') c = 'E';
  }
  std::size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(t, &pos);
  } catch (const std::exception&) {
    throw ParseError("non-numeric value '" + token + "'", line);
  }
  if (pos != t.size()) throw ParseError("non-numeric value '" + token + "'", line);
  return v;
}

long parse_int(const std::string& token, int line) {
  std::size_t pos = 0;
  long v = 0;
  try {
    v = std::stol(token, &pos);
  } catch (const std::exception&) {
    throw ParseError("non-numeric index '" + token + "'", line);
  }
  if (pos != token.size()) throw ParseError("non-numeric index '" + token + "'", line);
  return v;
}

struct NamelistEntry {
  std::string key;
  std::vector<std::string> values;
};

void chomp(std::string& line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
}

// Reads the &FCI ... (&END or /) namelist, tracking line numbers. Returns
// the entries in file order and the line count consumed.
std::vector<NamelistEntry> read_namelist(std::istream& in, int& line_no) {
  std::string body;
  std::string line;
  bool started = false, terminated = false;
  while (!terminated && std::getline(in, line)) {
    ++line_no;
    chomp(line);
    std::string upper = to_upper(line);
    std::size_t begin = 0;
    if (!started) {
      const auto amp = upper.find("&FCI");
      if (amp == std::string::npos) {
        if (trim(line).empty()) continue;
        throw ParseError("expected &FCI namelist header", line_no);
      }
      started = true;
      begin = amp + 4;
    }
    std::size_t end = line.size();
    const auto term_amp = upper.find("&END", begin);
    const auto term_slash = line.find('/', begin);
    if (term_amp != std::string::npos || term_slash != std::string::npos) {
      end = std::min(term_amp == std::string::npos ? line.size() : term_amp,
                     term_slash == std::string::npos ? line.size() : term_slash);
      terminated = true;
    }
    body += line.substr(begin, end - begin);
    body += ' ';
  }
  if (!started) throw ParseError("expected &FCI namelist header", std::max(line_no, 1));
  if (!terminated) throw ParseError("namelist not terminated by &END or /", line_no);

  // KEY=VALUE[,VALUE...] pairs, free-form whitespace and commas.
  std::vector<NamelistEntry> entries;
  std::size_t i = 0;
  const auto skip_sep = [&] {
    while (i < body.size() && (std::isspace(static_cast<unsigned char>(body[i])) || body[i] == ','))
      ++i;
  };
  skip_sep();
  while (i < body.size()) {
    const auto eq = body.find('=', i);
    if (eq == std::string::npos)
      throw ParseError("malformed namelist near '" + trim(body.substr(i)) + "'", line_no);
    NamelistEntry entry;
    entry.key = to_upper(trim(body.substr(i, eq - i)));
    if (entry.key.empty()) throw ParseError("empty namelist key", line_no);
    i = eq + 1;
    // Values run until the next KEY= (scan ahead for '=' boundaries).
    while (true) {
      skip_sep();
      if (i >= body.size()) break;
      std::size_t j = i;
      while (j < body.size() && !std::isspace(static_cast<unsigned char>(body[j])) &&
             body[j] != ',' && body[j] != '=')
        ++j;
      std::size_t peek = j;
      while (peek < body.size() && std::isspace(static_cast<unsigned char>(body[peek])))
        ++peek;
      if (peek < body.size() && body[peek] == '=') break;  // token starts the next key
      entry.values.push_back(body.substr(i, j - i));
      i = j;
    }
    entries.push_back(std::move(entry));
  }
  return entries;
}

std::uint64_t canonical_key(const IntegralRecord& rec, int n_orbitals) {
  const auto c = canonical_indices(rec);
  const auto base = static_cast<std::uint64_t>(n_orbitals) + 1;
  std::uint64_t key = 0;
  for (int idx : c) key = key * base + static_cast<std::uint64_t>(idx);
  return key;
}

}  // namespace

std::array<int, 4> canonical_indices(const IntegralRecord& rec) {
  if (rec.one_electron()) {
    return {std::min(rec.i, rec.j), std::max(rec.i, rec.j), 0, 0};
  }
  std::array<int, 2> bra{std::min(rec.i, rec.j), std::max(rec.i, rec.j)};
  std::array<int, 2> ket{std::min(rec.k, rec.l), std::max(rec.k, rec.l)};
  if (ket < bra) std::swap(bra, ket);
  return {bra[0], bra[1], ket[0], ket[1]};
}

std::uint64_t symmetry_multiplicity(const IntegralRecord& rec) {
  if (rec.i == 0) return 1;  // core energy line
  if (rec.one_electron()) return rec.i == rec.j ? 1 : 2;
  std::uint64_t count = 8;
  if (rec.i == rec.j) count /= 2;
  if (rec.k == rec.l) count /= 2;
  const std::array<int, 2> bra{std::min(rec.i, rec.j), std::max(rec.i, rec.j)};
  const std::array<int, 2> ket{std::min(rec.k, rec.l), std::max(rec.k, rec.l)};
  if (bra == ket) count /= 2;
  return count;
}

bool operator==(const FciDump& a, const FciDump& b) {
  if (a.n_orbitals != b.n_orbitals || a.n_electrons != b.n_electrons || a.ms2 != b.ms2 ||
      a.orbital_symmetries != b.orbital_symmetries || a.core_energy != b.core_energy ||
      a.has_core_energy != b.has_core_energy)
    return false;
  const auto canonical_set = [](const FciDump& d) {
    std::map<std::array<int, 4>, double> set;
    for (const auto& rec : d.integrals) set[canonical_indices(rec)] = rec.value;
    return set;
  };
  return canonical_set(a) == canonical_set(b);
}

FciDump parse_fcidump(std::istream& in) {
  int line_no = 0;
  const auto entries = read_namelist(in, line_no);

  FciDump dump;
  bool have_norb = false, have_nelec = false;
  for (const auto& entry : entries) {
    if (entry.key == "NORB") {
      if (entry.values.size() != 1)
        throw ParseError("NORB expects a single value", line_no);
      dump.n_orbitals = static_cast<int>(parse_int(entry.values[0], line_no));
      have_norb = true;
    } else if (entry.key == "NELEC") {
      if (entry.values.size() != 1)
        throw ParseError("NELEC expects a single value", line_no);
      dump.n_electrons = static_cast<int>(parse_int(entry.values[0], line_no));
      have_nelec = true;
    } else if (entry.key == "MS2") {
      if (entry.values.size() != 1)
        throw ParseError("MS2 expects a single value", line_no);
      dump.ms2 = static_cast<int>(parse_int(entry.values[0], line_no));
    } else if (entry.key == "ORBSYM") {
      for (const auto& v : entry.values)
        dump.orbital_symmetries.push_back(static_cast<int>(parse_int(v, line_no)));
    } else {
      std::string joined;
      for (std::size_t i = 0; i < entry.values.size(); ++i) {
        if (i) joined += ',';
        joined += entry.values[i];
      }
      dump.extra_keys.emplace_back(entry.key, joined);
    }
  }
  if (!have_norb) throw ParseError("missing NORB in namelist", line_no);
  if (!have_nelec) throw ParseError("missing NELEC in namelist", line_no);
  if (dump.n_orbitals < 1)
    throw ParseError("NORB must be at least 1", line_no);
  if (dump.n_electrons < 0 || dump.n_electrons > 2 * dump.n_orbitals)
    throw ParseError("NELEC must lie in [0, 2*NORB]", line_no);

  std::set<std::uint64_t> seen;
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    chomp(line);
    if (trim(line).empty()) continue;
    std::istringstream ls(line);
    std::string vtok, itok, jtok, ktok, ltok;
    if (!(ls >> vtok >> itok >> jtok >> ktok >> ltok))
      throw ParseError("expected 'value i j k l'", line_no);
    std::string rest;
    if (ls >> rest) throw ParseError("trailing tokens after 'value i j k l'", line_no);

    IntegralRecord rec;
    rec.value = parse_value(vtok, line_no);
    rec.i = static_cast<int>(parse_int(itok, line_no));
    rec.j = static_cast<int>(parse_int(jtok, line_no));
    rec.k = static_cast<int>(parse_int(ktok, line_no));
    rec.l = static_cast<int>(parse_int(ltok, line_no));

    for (int idx : {rec.i, rec.j, rec.k, rec.l}) {
      if (idx < 0 || idx > dump.n_orbitals)
        throw ParseError("orbital index " + std::to_string(idx) + " out of range [0, " +
                             std::to_string(dump.n_orbitals) + "]",
                         line_no);
    }
    if (rec.i == 0 && rec.j == 0 && rec.k == 0 && rec.l == 0) {
      if (dump.has_core_energy) throw ParseError("duplicate core-energy entry", line_no);
      dump.core_energy = rec.value;
      dump.has_core_energy = true;
      continue;
    }
    if (rec.k == 0 || rec.l == 0) {
      if (rec.k != 0 || rec.l != 0 || rec.i == 0 || rec.j == 0)
        throw ParseError("invalid index pattern; expected (i,j,k,l), (i,j,0,0) or (0,0,0,0)",
                         line_no);
    } else if (rec.i == 0 || rec.j == 0) {
      throw ParseError("invalid index pattern; expected (i,j,k,l), (i,j,0,0) or (0,0,0,0)",
                       line_no);
    }
    if (!seen.insert(canonical_key(rec, dump.n_orbitals)).second)
      throw ParseError("duplicate integral (symmetry-equivalent entry already seen)", line_no);
    dump.integrals.push_back(rec);
  }
  return dump;
}

FciDump parse_fcidump_string(const std::string& text) {
  std::istringstream in(text);
  return parse_fcidump(in);
}

FciDump parse_fcidump_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  return parse_fcidump(in);
}

std::string serialize_fcidump(const FciDump& dump) {
  std::ostringstream out;
  out << "&FCI NORB=" << dump.n_orbitals << ",NELEC=" << dump.n_electrons
      << ",MS2=" << dump.ms2 << ",\n";
  if (!dump.orbital_symmetries.empty()) {
    out << "  ORBSYM=";
    for (int s : dump.orbital_symmetries) out << s << ',';
    out << '\n';
  }
  for (const auto& [key, value] : dump.extra_keys) out << "  " << key << '=' << value << ",\n";
  out << "&END\n";
  char buf[64];
  const auto write_line = [&](double value, int i, int j, int k, int l) {
    std::snprintf(buf, sizeof(buf), "%24.16E %4d %4d %4d %4d\n", value, i, j, k, l);
    out << buf;
  };
  for (const auto& rec : dump.integrals) write_line(rec.value, rec.i, rec.j, rec.k, rec.l);
  if (dump.has_core_energy) write_line(dump.core_energy, 0, 0, 0, 0);
  return out.str();
}

const char* to_string(HamiltonianStats::Source source) {
  return source == HamiltonianStats::Source::parsed ? "parsed" : "summary";
}

HamiltonianStats sparsify(const FciDump& dump, double threshold) {
  if (threshold < 0 || std::isnan(threshold))
    throw ValidationError("truncation threshold must be nonnegative");
  HamiltonianStats stats;
  stats.n_orbitals = dump.n_orbitals;
  stats.n_electrons = dump.n_electrons;
  stats.truncation_threshold = threshold;
  stats.source = HamiltonianStats::Source::parsed;
  for (const auto& rec : dump.integrals) {
    const double mag = std::abs(rec.value);
    if (!(mag > threshold)) continue;
    const std::uint64_t mult = symmetry_multiplicity(rec);
    stats.n_terms += mult;
    stats.lambda_one_norm += static_cast<double>(mult) * mag;
  }
  return stats;
}

HamiltonianStats stats_from_summary(int n_orbitals, int n_electrons, std::uint64_t n_terms,
                                    double lambda) {
  if (n_orbitals < 1) throw ValidationError("n_orbitals must be at least 1");
  if (n_electrons < 0 || n_electrons > 2 * n_orbitals)
    throw ValidationError("n_electrons must lie in [0, 2*n_orbitals]");
  if (lambda < 0 || std::isnan(lambda)) throw ValidationError("lambda must be nonnegative");
  if ((lambda == 0) != (n_terms == 0))
    throw ValidationError("lambda must be zero exactly when the term count is zero");
  if (n_terms > max_expanded_terms(n_orbitals))
    throw ValidationError("term count exceeds the symmetry-expanded total for " +
                          std::to_string(n_orbitals) + " orbitals");
  HamiltonianStats stats;
  stats.n_orbitals = n_orbitals;
  stats.n_electrons = n_electrons;
  stats.n_terms = n_terms;
  stats.lambda_one_norm = lambda;
  stats.truncation_threshold = 0.0;
  stats.source = HamiltonianStats::Source::summary;
  return stats;
}

std::uint64_t integral_volume(int n_orbitals, std::uint64_t bytes_per_value) {
  if (n_orbitals < 1) throw ValidationError("n_orbitals must be at least 1");
  const auto n = static_cast<unsigned __int128>(n_orbitals);
  const unsigned __int128 bits = n * n * n * n * bytes_per_value;  // N^4/8 values
  const unsigned __int128 bytes = (bits + 7) / 8;
  if (bytes > static_cast<unsigned __int128>(UINT64_MAX))
    throw ValidationError("integral volume overflows 64 bits");
  return static_cast<std::uint64_t>(bytes);
}

std::uint64_t max_expanded_terms(int n_orbitals) {
  const auto n = static_cast<std::uint64_t>(n_orbitals);
  return n * n * n * n + n * n;
}

}  // namespace qrex
