#ifndef RINGLAB_IO_HPP
#define RINGLAB_IO_HPP

#include <string>

#include "ringlab/ring.hpp"

namespace ringlab {

// Ring definition file:
//
//   ring <name>
//   moduli d_1 ... d_r
//   mul i j : c_1 ... c_r        (0-based; omitted pairs multiply to zero)
//
// An equivalent JSON object form is accepted on input:
//   {"ring": "<name>", "moduli": [...], "mul": [[i, j, [c_1, ...]], ...]}
//
// The canonical text dump is byte-stable: pairs sorted by (i, j), all-zero
// products omitted, constants reduced, single spaces, LF line endings.
Ring parse_ring_text(const std::string& text);
Ring load_ring_file(const std::string& path);
std::string dump_ring_text(const Ring& r);
void write_ring_file(const Ring& r, const std::string& path);

} // namespace ringlab

#endif
