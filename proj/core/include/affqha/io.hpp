#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "affqha/hilbert.hpp"

namespace affqha {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Shortest round-trip-safe decimal form: 17 significant digits.
std::string format_double(double v);

// r,re,im
void write_signal_csv(std::ostream& os, const Signal& psi);
Signal read_signal_csv(std::istream& is, const LogGrid& grid);

// x,a,re,im with x as the outer index.
void write_aff_csv(std::ostream& os, const AffFunction& f);
AffFunction read_aff_csv(std::istream& is, const AffGrid& grid);

// r,s,re,im with r as the outer index.
void write_operator_csv(std::ostream& os, const OperatorRep& S);
OperatorRep read_operator_csv(std::istream& is, const LogGrid& grid);

}  // namespace affqha
