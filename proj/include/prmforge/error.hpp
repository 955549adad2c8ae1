/**
 * @file error.hpp
 * @brief Exception taxonomy shared by every prmforge module.
 *
 * All library failures derive from prmforge::Error and carry an ErrorKind so
 * the command-line front end can map them onto its fixed exit codes.
 */

#ifndef PRMFORGE_ERROR_HPP
#define PRMFORGE_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace prmforge {

enum class ErrorKind {
    NotPrime,
    ReducibleModulus,
    UnsupportedFieldSize,
    DivisionByZero,
    SizeOverflow,
    RankOutOfRange,
    DimensionMismatch,
    DegreeTooLarge,
    DegreeDivisible,
    HypothesisViolated,
    CacheCorrupt,
    Parse,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

   private:
    ErrorKind kind_;
};

// Thin named subclasses so callers (and tests) can catch a specific failure.
#define PRMFORGE_DEFINE_ERROR(Name)                                                       \
    class Name : public Error {                                                           \
       public:                                                                            \
        explicit Name(const std::string& what) : Error(ErrorKind::Name, what) {}          \
    };

PRMFORGE_DEFINE_ERROR(NotPrime)
PRMFORGE_DEFINE_ERROR(ReducibleModulus)
PRMFORGE_DEFINE_ERROR(UnsupportedFieldSize)
PRMFORGE_DEFINE_ERROR(DivisionByZero)
PRMFORGE_DEFINE_ERROR(SizeOverflow)
PRMFORGE_DEFINE_ERROR(RankOutOfRange)
PRMFORGE_DEFINE_ERROR(DimensionMismatch)
PRMFORGE_DEFINE_ERROR(DegreeTooLarge)
PRMFORGE_DEFINE_ERROR(DegreeDivisible)
PRMFORGE_DEFINE_ERROR(HypothesisViolated)
PRMFORGE_DEFINE_ERROR(CacheCorrupt)

#undef PRMFORGE_DEFINE_ERROR

class ParseError : public Error {
   public:
    explicit ParseError(const std::string& what) : Error(ErrorKind::Parse, what) {}
};

}  // namespace prmforge

#endif
