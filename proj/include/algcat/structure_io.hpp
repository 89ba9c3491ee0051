#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "algcat/errors.hpp"
#include "algcat/loops.hpp"
#include "algcat/neardomain.hpp"
#include "algcat/permcore.hpp"
#include "algcat/rps.hpp"
#include "algcat/s2t.hpp"

namespace algcat {

/// Text structure files. Line 1 is the header, `#` lines and blank lines
/// are ignored:
///
///   loop n [identity]        n table rows
///   ndom n zero one          n addition rows, a line `mul`, n multiplication rows
///   rps n omega              one permutation image list per line
///   s2t n omega0 omega1      full element listing, or `generators` then generators
using Structure = std::variant<Loop, Neardomain, Rps, S2tGroup>;

enum class StructureKind { Loop, Ndom, Rps, S2t };

const char* to_string(StructureKind k);
StructureKind parse_kind(std::string_view name);  ///< throws DomainError
StructureKind kind_of(const Structure& s);

/// Malformed text. `line` is 1-based, 0 when the input ended early.
class ParseError : public AlgebraError {
public:
    ParseError(int line, const std::string& what);
    int line() const noexcept { return line_; }

private:
    int line_;
};

/// Well-formed text describing an invalid structure; carries the checker's
/// message and witness, plus the line of the offending permutation if any.
class SemanticError : public AlgebraError {
public:
    SemanticError(int line, const std::string& what, std::vector<int> witness);
    int line() const noexcept { return line_; }
    const std::vector<int>& witness() const noexcept { return witness_; }

private:
    int line_;
    std::vector<int> witness_;
};

Structure parse_structure(std::string_view text, std::size_t max_closure = kDefaultClosureCap);

/// Reads and parses a file; an unreadable file is a ParseError at line 0.
Structure read_structure(const std::string& path, std::size_t max_closure = kDefaultClosureCap);

/// Canonical text: full listings, sorted members, trailing newline.
std::string emit_structure(const Structure& s);

}  // namespace algcat
