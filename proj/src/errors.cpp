#include "stieltjes/errors.hpp"

namespace stieltjes {

InsufficientMoments::InsufficientMoments(std::size_t required, std::size_t available,
                                         const std::string& what)
    : DomainError("need more moments: " + what + " requires at least " +
                  std::to_string(required) + ", have " + std::to_string(available)),
      required_(required),
      available_(available) {}

NotRegular::NotRegular(std::size_t step)
    : DomainError("sequence not regular at step " + std::to_string(step)), step_(step) {}

}  // namespace stieltjes
