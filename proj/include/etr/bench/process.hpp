// One-shot child process: text in on stdin, text out on stdout.

#pragma once

#include <map>
#include <string>

namespace etr::bench {

struct ProcessResult {
  std::string out;
  std::string err;
  int exit_code = -1;  // -1 when killed or not exited normally
  bool timed_out = false;
  double seconds = 0.0;
};

// Runs `/bin/sh -c command` with `input` on stdin. The whole process group
// is killed once `timeout_seconds` elapse. Extra environment entries are
// added to the child's environment. Throws etr::ResponderError when the
// child cannot be created at all.
ProcessResult RunProcess(const std::string& command, const std::string& input, double timeout_seconds,
                         const std::map<std::string, std::string>& env = {});

}  // namespace etr::bench
