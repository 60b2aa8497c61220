#pragma once

#define DSTM_VERSION "0.1.0"
