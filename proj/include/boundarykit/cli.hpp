#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace boundarykit {

// Subcommands: boundary, verify {dp|k|lemma}, hypotheses, enumerate.
// Returns 0 on success / pass, 1 on a verification failure, 2 on usage or
// input errors (message on `err`). JSON goes to `out`.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace boundarykit
