#pragma once

// Umbrella header. service.hpp is left out so that library users do not pull
// in cpp-httplib unless they need the HTTP facade.
#include "seqmine/bench.hpp"
#include "seqmine/errors.hpp"
#include "seqmine/gsp.hpp"
#include "seqmine/io.hpp"
#include "seqmine/item.hpp"
#include "seqmine/mining.hpp"
#include "seqmine/naive.hpp"
#include "seqmine/rsp.hpp"
#include "seqmine/sequence.hpp"
#include "seqmine/sequence_db.hpp"
#include "seqmine/synth.hpp"
#include "seqmine/timestamp.hpp"
#include "seqmine/transaction_db.hpp"
