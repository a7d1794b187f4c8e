#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace graphk {

// Malformed or out-of-contract input (bad file, unknown vertex, shape mismatch).
class input_error : public std::runtime_error {
 public:
  explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// A configured size bound was exceeded (never a wrong answer, only a refusal).
class capacity_error : public std::runtime_error {
 public:
  explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

// A graph move was attempted whose precondition does not hold.  `clause`
// names the violated requirement; `step` is set when the failure happened
// inside a script.
class move_error : public std::runtime_error {
 public:
  move_error(std::string move, std::string clause)
      : std::runtime_error(move + ": " + clause),
        move_(std::move(move)),
        clause_(std::move(clause)) {}

  move_error(std::string move, std::string clause, int step)
      : std::runtime_error("step " + std::to_string(step) + ": " + move + ": " + clause),
        move_(std::move(move)),
        clause_(std::move(clause)),
        step_(step) {}

  const std::string& move() const { return move_; }
  const std::string& clause() const { return clause_; }
  std::optional<int> step() const { return step_; }

 private:
  std::string move_;
  std::string clause_;
  std::optional<int> step_;
};

}  // namespace graphk
