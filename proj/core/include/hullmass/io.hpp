#ifndef HULLMASS_IO_HPP
#define HULLMASS_IO_HPP

#include <functional>
#include <iosfwd>
#include <string>

#include "hullmass/code.hpp"

namespace hullmass {
namespace io {

/// Resolves a field order to a Field instance; the default uses the
/// built-in modulus table. A CLI-supplied modulus override plugs in here.
using FieldResolver = std::function<const Field&(unsigned order)>;

/// Parses the generator-matrix text format:
///   q=<order> n=<length> k=<dim>
/// followed by k lines of n space-separated encodings in [0,q).
/// `#` starts a comment line; blank lines are skipped; rank-deficient
/// rows are accepted (the true dimension wins). Parse errors throw
/// std::runtime_error naming the 1-based line number.
LinearCode load_code(std::istream& in, const FieldResolver& resolver = nullptr);

/// load_code on the named file; errors mention the path.
LinearCode load_code_file(const std::string& path, const FieldResolver& resolver = nullptr);

/// Writes a matrix in the same format (k = row count as given).
void save_code(std::ostream& out, const Matrix& generator);

}  // namespace io
}  // namespace hullmass

#endif
