#ifndef CORECHOR_PRF_SYNTAX_HPP
#define CORECHOR_PRF_SYNTAX_HPP

#include <cctype>
#include <cstddef>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "corechor/error.hpp"
#include "corechor/prf/function.hpp"

namespace corechor::prf {

// Surface syntax:
//   Z | S | P[k/m] (1-based k) | C(g; f1, ..., fm) | R(g, h) | M(h)

namespace detail {

class PrfParser {
 public:
  explicit PrfParser(std::string_view text) : text_(text) {}

  Function parse() {
    Function f = function();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing input");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& message, std::size_t at) const {
    std::size_t line = 1;
    std::size_t col = 1;
    for (std::size_t i = 0; i < at && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(message, line, col);
  }

  [[noreturn]] void fail(const std::string& message) const { fail(message, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::size_t number() {
    skip_ws();
    std::size_t start = pos_;
    std::size_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + static_cast<std::size_t>(text_[pos_] - '0');
      ++pos_;
    }
    if (start == pos_) fail("expected a number");
    return v;
  }

  template <class Build>
  Function checked(std::size_t at, Build&& build) {
    try {
      return build();
    } catch (const ArityMismatch& e) {
      fail(e.what(), at);
    }
  }

  Function function() {
    skip_ws();
    if (pos_ >= text_.size()) fail("expected a function");
    std::size_t at = pos_;
    char c = text_[pos_++];
    switch (c) {
      case 'Z': return Function::zero();
      case 'S': return Function::successor();
      case 'P': {
        expect('[');
        std::size_t k = number();
        expect('/');
        std::size_t m = number();
        expect(']');
        if (k == 0) fail("projection indices start at 1", at);
        return checked(at, [&] { return Function::projection(k - 1, m); });
      }
      case 'C': {
        expect('(');
        Function g = function();
        expect(';');
        std::vector<Function> fs{function()};
        while (accept(',')) fs.push_back(function());
        expect(')');
        return checked(at, [&] { return Function::compose(g, std::move(fs)); });
      }
      case 'R': {
        expect('(');
        Function g = function();
        expect(',');
        Function h = function();
        expect(')');
        return checked(at, [&] { return Function::recursion(g, h); });
      }
      case 'M': {
        expect('(');
        Function h = function();
        expect(')');
        return checked(at, [&] { return Function::minimization(h); });
      }
      default:
        fail(std::string("unexpected '") + c + "'", at);
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Throws ParseError (with line and column) on syntax or arity errors.
inline Function parse_function(std::string_view text) { return detail::PrfParser(text).parse(); }

inline void print_function(std::ostream& os, const Function& f) {
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Zero>) {
          os << 'Z';
        } else if constexpr (std::is_same_v<T, Successor>) {
          os << 'S';
        } else if constexpr (std::is_same_v<T, Projection>) {
          os << "P[" << n.index + 1 << '/' << n.arity << ']';
        } else if constexpr (std::is_same_v<T, Composition>) {
          os << "C(";
          print_function(os, *n.g);
          os << "; ";
          for (std::size_t i = 0; i < n.fs.size(); ++i) {
            if (i) os << ", ";
            print_function(os, n.fs[i]);
          }
          os << ')';
        } else if constexpr (std::is_same_v<T, Recursion>) {
          os << "R(";
          print_function(os, *n.g);
          os << ", ";
          print_function(os, *n.h);
          os << ')';
        } else {
          os << "M(";
          print_function(os, *n.h);
          os << ')';
        }
      },
      f.node());
}

inline std::string to_string(const Function& f) {
  std::ostringstream os;
  print_function(os, f);
  return os.str();
}

inline std::ostream& operator<<(std::ostream& os, const Function& f) {
  print_function(os, f);
  return os;
}

}  // namespace corechor::prf

#endif  // CORECHOR_PRF_SYNTAX_HPP
