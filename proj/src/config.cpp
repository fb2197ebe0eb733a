#include "ccseq/config.hpp"

#include "ccseq/error.hpp"

#include <cstdlib>
#include <string>

namespace ccseq {

std::size_t length_cap() {
    static const std::size_t cap = [] {
        const char* env = std::getenv(kLengthCapEnvVar);
        if (env == nullptr || *env == '\0') {
            return kDefaultLengthCap;
        }
        try {
            const long long parsed = std::stoll(env);
            if (parsed < 1) {
                throw Error(std::string(kLengthCapEnvVar) +
                            " must be a positive chip count");
            }
            return static_cast<std::size_t>(parsed);
        } catch (const std::logic_error&) {
            throw Error(std::string(kLengthCapEnvVar) + " is not an integer: " +
                        env);
        }
    }();
    return cap;
}

} // namespace ccseq
