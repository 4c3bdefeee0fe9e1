#ifndef HOPFQ_CLI_HPP
#define HOPFQ_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace hopfq {

/// Command-line driver behind the hopfq binary. Commands: verify, decide,
/// fundamental, dualize, loop. Exit codes: 0 success, 1 mathematical
/// failure, 2 input error.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace hopfq

#endif
