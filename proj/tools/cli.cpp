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

#include "cli.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "permsum/bounds.hpp"
#include "permsum/errors.hpp"
#include "permsum/families.hpp"
#include "permsum/search.hpp"
#include "permsum/verify.hpp"

namespace permsum::cli {

namespace {

Quantity require_quantity(const std::string& text) {
  auto q = parse_quantity(text);
  if (!q) throw CLI::ValidationError("quantity", "expected s, t or f, got '" + text + "'");
  return *q;
}

std::string format_float(std::optional<double> v) {
  if (!v) return "-";
  std::ostringstream s;
  s << std::setprecision(6) << *v;
  return s.str();
}

void print_bounds(std::ostream& out, const BoundsReport& b) {
  const std::string upper = b.upper_exact ? b.upper_exact->value.str() : "-";
  const std::string exact = b.exact ? b.exact->value.str() : "-";
  std::string prov = "lower=" + b.lower.provenance;
  if (b.upper_exact) prov += " upper=" + b.upper_exact->provenance;
  if (b.exact) prov += " exact=" + b.exact->provenance;

  out << std::left << std::setw(10) << "quantity" << std::setw(14) << "lower"
      << std::setw(14) << "upper_exact" << std::setw(14) << "upper_float"
      << std::setw(16) << "exact_if_known" << "provenance\n";
  out << std::setw(10) << to_string(b.quantity) << std::setw(14)
      << b.lower.value.str() << std::setw(14) << upper << std::setw(14)
      << format_float(b.upper_float) << std::setw(16) << exact << prov << '\n';
  out << std::right;

  out << "n=" << b.n << '\n';
  out << "quantity=" << to_string(b.quantity) << '\n';
  out << "lower=" << b.lower.value.str() << '\n';
  out << "upper_exact=" << upper << '\n';
  if (b.upper_product) out << "upper_product=" << b.upper_product->value.str() << '\n';
  if (b.upper_squared_factorial) {
    out << "upper_squared_factorial=" << b.upper_squared_factorial->value.str()
        << '\n';
  }
  out << "upper_float=" << format_float(b.upper_float) << '\n';
  out << "exact=" << exact << '\n';
}

unsigned thread_count(unsigned requested, bool serial) {
  if (serial) return 1;
  if (const char* env = std::getenv("PERMSUM_THREADS")) {
    try {
      const unsigned long v = std::stoul(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
      // Ignore malformed values.
    }
  }
  if (requested > 0) return requested;
  return std::max(1U, std::thread::hardware_concurrency());
}

void write_file(const std::string& path, const Family& fam) {
  std::ofstream file(path);
  if (!file) throw std::runtime_error("cannot open '" + path + "' for writing");
  write_family(file, fam);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Permutation families of Z_n with constrained pairwise sums"};
  app.require_subcommand(1);

  std::string quantity_text;
  std::string kind_text;
  std::uint32_t n = 0;
  std::string path;
  std::string output;
  double time_limit = 0.0;
  unsigned threads = 0;
  bool serial = false;
  bool log = false;
  bool allow_even = false;

  auto* bounds_cmd = app.add_subcommand("bounds", "Closed-form bounds for s, t or f");
  bounds_cmd->add_option("n", n)->required();
  bounds_cmd->add_option("quantity", quantity_text, "s | t | f")->required();

  auto* construct_cmd = app.add_subcommand("construct", "Build a lower-bound family");
  construct_cmd->add_option("kind", kind_text, "p1 | p2 | p3")->required();
  construct_cmd->add_option("n", n)->required();
  construct_cmd->add_option("-o,--output", output, "family file to write");
  construct_cmd->add_flag("--allow-even", allow_even,
                          "p1 with even n returns the one-member family");

  auto* verify_cmd = app.add_subcommand("verify", "Check every pair of a family file");
  verify_cmd->add_option("file", path)->required();
  verify_cmd->add_option("--threads", threads);

  auto* search_cmd = app.add_subcommand("search", "Exact s(n), t(n) or f(n)");
  search_cmd->add_option("quantity", quantity_text, "s | t | f")->required();
  search_cmd->add_option("n", n)->required();
  search_cmd->add_option("--time-limit", time_limit, "seconds; 0 = unlimited")
      ->check(CLI::NonNegativeNumber);
  search_cmd->add_flag("--serial", serial);
  search_cmd->add_option("--threads", threads);
  search_cmd->add_option("-o,--output", output, "certificate family file");
  search_cmd->add_flag("--log", log, "run log on stderr");

  auto* classes_cmd = app.add_subcommand("classes", "Affine equivalence classes of S(Z_n)");
  classes_cmd->add_option("n", n)->required();

  auto* oracle_cmd = app.add_subcommand("oracle", "Reference value without symmetry reduction");
  oracle_cmd->add_option("quantity", quantity_text, "s | t | f")->required();
  oracle_cmd->add_option("n", n)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (!verify_cmd->parsed() && n < 2) {
      throw std::invalid_argument("n must be >= 2");
    }

    if (bounds_cmd->parsed()) {
      print_bounds(out, bounds(n, require_quantity(quantity_text)));
      return kOk;
    }

    if (construct_cmd->parsed()) {
      const Modulus m = factorize(n);
      std::optional<Family> fam;
      if (kind_text == "p1") {
        fam = construct_p1(m, allow_even ? EvenPolicy::TrivialFamily : EvenPolicy::Reject);
      } else if (kind_text == "p2") {
        fam = construct_p2(m);
      } else if (kind_text == "p3") {
        fam = construct_p3_prime(m);
      } else {
        throw std::invalid_argument("kind must be p1, p2 or p3");
      }
      if (output.empty()) {
        write_family(out, *fam);
      } else {
        write_file(output, *fam);
        out << "count=" << fam->size() << '\n';
      }
      return kOk;
    }

    if (verify_cmd->parsed()) {
      std::ifstream file(path);
      if (!file) throw ParseError("cannot open '" + path + "'");
      Family fam = read_family(file);
      const VerifyReport report = verify_family(fam, thread_count(threads, false));
      out << "n=" << fam.n() << " prop=" << to_string(fam.prop())
          << " count=" << fam.size() << '\n';
      out << format_report(report);
      return report.ok ? kOk : kFailure;
    }

    if (search_cmd->parsed()) {
      const Quantity q = require_quantity(quantity_text);
      SearchOptions opts;
      opts.threads = thread_count(threads, serial);
      opts.time_limit = std::chrono::duration_cast<std::chrono::nanoseconds>(
          std::chrono::duration<double>(time_limit));
      if (log) {
        opts.on_improvement = [&err](const Improvement& imp) {
          err << "incumbent size=" << imp.size << " elapsed_ms="
              << std::chrono::duration_cast<std::chrono::milliseconds>(imp.elapsed).count()
              << " nodes=" << imp.nodes << '\n';
        };
      }
      const SearchResult r = extremal(factorize(n), q, opts);
      out << "quantity=" << to_string(q) << '\n';
      out << "n=" << n << '\n';
      out << "value=" << r.value << '\n';
      out << "status=" << to_string(r.status) << '\n';
      if (log) {
        err << "nodes=" << r.nodes_explored << " elapsed_ms="
            << std::chrono::duration_cast<std::chrono::milliseconds>(r.elapsed).count()
            << " threads=" << opts.threads << '\n';
      }
      if (!output.empty()) write_file(output, r.certificate);
      return kOk;
    }

    if (classes_cmd->parsed()) {
      const Modulus m = factorize(n);
      const auto classes = equivalence_classes(m);
      std::map<std::size_t, std::size_t> histogram;
      for (const auto& c : classes) ++histogram[c.members.size()];
      out << "n=" << n << '\n';
      out << "classes=" << classes.size() << '\n';
      out << "expected_classes=" << (factorial(n - 1) / m.phi()).str() << '\n';
      for (const auto& [size, count] : histogram) {
        out << "size=" << size << " count=" << count << '\n';
      }
      return kOk;
    }

    if (oracle_cmd->parsed()) {
      const Quantity q = require_quantity(quantity_text);
      out << "quantity=" << to_string(q) << '\n';
      out << "n=" << n << '\n';
      out << "value=" << oracle_extremal(factorize(n), q) << '\n';
      return kOk;
    }
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const ResourceLimitError& e) {
    err << "resource limit: " << e.what() << '\n';
    return kResource;
  } catch (const ConsistencyError& e) {
    err << "consistency failure: " << e.what() << '\n';
    return kFailure;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kUsage;
}

}  // namespace permsum::cli
