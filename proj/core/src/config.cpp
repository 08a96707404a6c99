#include "bqm/config.hpp"
