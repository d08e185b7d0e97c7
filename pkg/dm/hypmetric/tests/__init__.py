# Copyright (C) 2026; see 'LICENSE.txt' for details
