#include "braids/ints.hpp"

// Int is header-only; this translation unit anchors the target.
