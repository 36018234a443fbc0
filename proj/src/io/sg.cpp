// Copyright 2026 The pcskit Authors
// SPDX-License-Identifier: Apache-2.0

#include "pcskit/io.hpp"

#include <fstream>
#include <sstream>

#include "pcskit/error.hpp"

namespace pcs {

  namespace {

    [[noreturn]] void syntax(long line, std::string const& what) {
      throw Error(ErrorCode::SyntaxError,
                  "line " + std::to_string(line) + ": " + what, line);
    }

    long parse_count(std::string const& token, long line) {
      std::size_t used = 0;
      long        v    = -1;
      try {
        v = std::stol(token, &used);
      } catch (std::exception const&) {
        syntax(line, "expected a non-negative integer, got '" + token + "'");
      }
      if (used != token.size() || v < 0) {
        syntax(line, "expected a non-negative integer, got '" + token + "'");
      }
      return v;
    }

  }  // namespace

  Semigroup read_sg(std::istream& in) {
    std::string line;
    long        number = 0;
    long        n      = -1;
    std::vector<std::vector<Element>> rows;
    std::vector<std::string>          labels;
    bool                              have_labels = false;
    while (std::getline(in, line)) {
      ++number;
      std::size_t first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#') {
        continue;
      }
      std::istringstream words(line);
      std::string        token;
      if (n < 0) {
        words >> token;
        n = parse_count(token, number);
        if (n == 0) {
          syntax(number, "order must be positive");
        }
        if (words >> token) {
          syntax(number, "unexpected text after the order");
        }
        continue;
      }
      if (have_labels) {
        syntax(number, "text after the labels line");
      }
      if (line.compare(first, 7, "labels:") == 0) {
        if (static_cast<long>(rows.size()) != n) {
          syntax(number, "labels before the table is complete");
        }
        words.str(line.substr(first + 7));
        while (words >> token) {
          labels.push_back(token);
        }
        if (static_cast<long>(labels.size()) != n) {
          syntax(number, "expected " + std::to_string(n) + " labels");
        }
        have_labels = true;
        continue;
      }
      if (static_cast<long>(rows.size()) == n) {
        syntax(number, "more than " + std::to_string(n) + " rows");
      }
      std::vector<Element> row;
      while (words >> token) {
        row.push_back(static_cast<Element>(parse_count(token, number)));
      }
      if (static_cast<long>(row.size()) != n) {
        syntax(number, "expected " + std::to_string(n) + " entries, got "
                           + std::to_string(row.size()));
      }
      rows.push_back(std::move(row));
    }
    if (n < 0) {
      syntax(number, "missing order line");
    }
    if (static_cast<long>(rows.size()) != n) {
      syntax(number, "expected " + std::to_string(n) + " rows, got "
                         + std::to_string(rows.size()));
    }
    return Semigroup::from_rows(rows, std::move(labels));
  }

  Semigroup parse_sg(std::string_view text) {
    std::istringstream in{std::string(text)};
    return read_sg(in);
  }

  Semigroup load_sg(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw Error(ErrorCode::InvalidArgument, "cannot open '" + path + "'");
    }
    return read_sg(in);
  }

  void write_sg(std::ostream& out, Semigroup const& s) {
    out << s.order() << '\n';
    for (Element i = 0; i < s.order(); ++i) {
      for (Element j = 0; j < s.order(); ++j) {
        out << (j ? " " : "") << s.product(i, j);
      }
      out << '\n';
    }
    if (s.has_labels()) {
      out << "labels:";
      for (auto const& l : s.labels()) {
        out << ' ' << l;
      }
      out << '\n';
    }
  }

  std::string format_sg(Semigroup const& s) {
    std::ostringstream os;
    write_sg(os, s);
    return os.str();
  }

}  // namespace pcs
