#include "residuum/error.hpp"

namespace residuum {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::not_prime: return "NotPrime";
    case Errc::out_of_range: return "OutOfRange";
    case Errc::context_mismatch: return "ContextMismatch";
    case Errc::division_by_zero: return "DivisionByZero";
    case Errc::non_residue: return "NonResidue";
    case Errc::bad_prime_form: return "BadPrimeForm";
    case Errc::not_magic: return "NotMagic";
    case Errc::nonzero_center: return "NonzeroCenter";
    case Errc::not_a_square: return "NotASquare";
    case Errc::not_a_member: return "NotAMember";
    case Errc::bound_exceeded: return "BoundExceeded";
    case Errc::bad_parameters: return "BadParameters";
    case Errc::divides_term: return "DividesTerm";
    case Errc::non_residue_difference: return "NonResidueDifference";
    case Errc::not_covered: return "NotCovered";
    case Errc::exception_5: return "Exception5";
    case Errc::all_zero: return "AllZero";
    case Errc::not_square_entried: return "NotSquareEntried";
    case Errc::odd_center: return "OddCenter";
    case Errc::unexpected_pattern: return "UnexpectedPattern";
    case Errc::bad_range: return "BadRange";
    case Errc::parse_error: return "ParseError";
    case Errc::file_not_found: return "FileNotFound";
    case Errc::internal: return "InternalError";
  }
  return "Unknown";
}

}  // namespace residuum
