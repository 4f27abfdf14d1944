#include "eafkit/errors.hpp"

namespace eafkit {

int exit_code(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::Validation: return 1;
        case ErrorKind::Io: return 2;
        case ErrorKind::Data: return 3;
    }
    return 1;
}

}  // namespace eafkit
