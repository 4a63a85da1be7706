"""Bundled reference data for the 1994-2011 citation-alert bibliography.

Two frequency tables (kept byte-for-byte as published, two-digit year
headers included):

* ``PROFILE_YEAR_TABLE`` -- citations of the 82 catalog publications per
  year, 82 rows x 18 year columns.
* ``DISCIPLINE_YEAR_TABLE`` -- occurrences of discipline terms per year,
  14 rows x 18 year columns.

Plus the default profile catalog (82 entries; merged entries carry one
match token per constituent work) and the default discipline lexicon
(the 14 table labels plus Ecol and Mgt), both in the same tab-separated
format accepted by the loaders in :mod:`bibcarto.corpus`.
"""

PROFILE_YEAR_TABLE = """\
                   94  95  96  97  98  99  00  01  02  03  04   05   06   07   08   09   10   11
Adams72             8  12   7   7   5   4   2   5   5   5   5    2    5    6    3    5    3    3
Anderberg73        73  54  67  60  64  78  72  58  65  56  39   56   48   64   53   77   52   67
Arabie87            8   7  11   8  10  10   5   4   6   4   0    0    0    0    0    0    0    0
Avise74            11  12  15   9   9  10   5   7   1   3   1    6    2    1    3    0    4    3
Benzecri73         41  50  50  40  51  43  51  30  29  39  24   30   32   25   32   34   38   35
Bezdek81           45  45 107  87 114 131  97 118 126 151 337  432  496  495  558  701  588  551
Bishop95            2   0   1   0   1   1   0  10 262 335   0    0    0    0    0    0    0    0
Blashfield76        0   0   0   0   0   0   0   0   0   0   3    6    8    4    3    8    5    5
Breiman84         106 130 181 165 199 228 224 224 275 358 266  294  345  393  441  620  528  647
Carroll70,80       34  24  25  31  24  40  27  40  33  28   0    0    0    0    0    0    0    0
Cormack71           2   6   7   2   4   7   5   4   8   2   7    8    3    5    8    9    6    9
Cover67            24  21  21  24  28  30  28  31  25  54   0    0    0    0    0    0    0    0
Devijver82         32  28  42  59  54  37  32  43  31  47  64   63   72   50   64   62   43   49
Diggle83           33  35  41  36  38  49  57  51  56  56  77   87   68   78   84  107   97   73
Duda73            241 252 304 283 337 309 289 324 379 600 825 1033 1175 1309 1416 1554 1164 1316
Efron83            14  24  21  21  20  30  32  26  16  25  20   43   60   61   56   66   56   53
Eldredge80         25  21  24  24  25  19  15  16  17  23  38   30   19   32   43   31   37   38
Everitt79,80       33  52  47  35  38  39  37  41  26  18 132  146  139  133  148  181  186  166
Farris72           22  23  39  26  21  25  12  21  18   9   5   10    4   12    9   10    3    7
Felsenstein82      35  38  23  16  16  13   6  16   7  10   3   10    3    5    9   10    4    3
Fisher36           42  49  50  70  64  68  60  67  86  96  96  207  187  223  249  255  267  284
Fitch67           102 104 113 111  90  79 110  75  85  65  63   84   64   51   62   47   44   36
Friedman77         10   8  13  13  18  18  18  12  17  17  26   28   23   30   40   38   38   34
Fu74,82            33  26  27  20  29  32  22  23  10  23  58   58   58   52   57   58   46   58
Fukunaga72         28  38  43  38  37  34  29  31  36  34 374  447  396  478  528  549  424  455
Gauch82            73  80  80 104  76 104  77  91  90  88   0    0    0    0    0    0    0    0
Gnanadesikan77     15  26  13  15   8  17  19  12  14  11   0    0    0    0    0    0    0    0
Gordon81           21  23  18  16  20  12  20  16  16   8  65   73   66   70   61   87   56   60
Gower66            40  14  33  37  27  34  34  33  33  47  29   52   66   60   60   87   61   95
Greenacre84        46  56  69  50  69  71  51  52  49  61  25   41   34   28   33   36   40   39
Guttman68          25  16  11  14  18  13  14  15  12  16  14   14   20   16   20   20    9    7
Hand81             33  26  30  28  30  33  20  18  28  25  65   89   96   83   95  119  102  119
Hartigan75         68  64  76  62  62  72  79  87  86  94 143  150  145  160  195  244  178  203
Hennig66           86  79  87  93  80  76  81  72  72  79 102  100  105  103  115  110   97  130
Hill74             14  15  19  14  13  10  11  11   4  12   0    5    9    3   18   14   11    2
Huber85            22  24  29  18  19  37  18  27  20  24   0    0    0    0    0    0    0    0
Hubert7685         15  12  14  16  13  19   8  23  18  37  36   48   72   78  104  135  137  134
Jain88             52  44  54  58  59  81  74  81  81 115 716  860  910  939 1014 1190  882  969
Jardine71           6   6   6   9   7   4   5   8   6   6  14   21   13   18   25   32   24   26
Johnson67          24  27  20  18  10  13   7   7   9   7  11   29   28   37   55   48   40   48
Kluge69            58  42  55  56  66  63  79  96  58  85  59   78   81   85   99  115  105  112
Kohonen95           0   0   2   0  13  52  88  80  91  97 374  444  415  450  534  693  438  462
Kruskal64,78       72  78  90 102  99  98 112 119 123 141 152  186  204  207  255  255  223  278
Lance67            11  13  14  15  10  22   8  18  13  16  18   24   17   13   21   17   15   25
Legendre83         20  24  33  31  32  25  36  24  22  21  26   44   33   42   45   24   35   37
Lorr83             11  19  13   6  10   8   5   7   9  11  11   19   12   19   12   13   10   17
Maddison84         55  48  41  38  48  50  46  34  35  23   0    0    0    0    0    0    0    0
Mantel67           61  77  99 117 112 138 145 185 182 207 163  296  308  360  362  453  392  452
Mayr69             26  22  19  31  22  25  26  21  19  15 132  140  124  152  142  149  128  179
McLachlan88,92,97  28  33  37  33  33  28  34  50 130 136 154  137  168  188  173  213  234  235
Michalski83        53  45  52  38  43  38  31  21   9  15  48   30   28   22   31   45   33   26
Milligan80,81,85   39  35  35  40  34  36  29  39  66  63  56   58   84   79   91  105   88  106
Murtagh83           2   2   0   0   4   4   0   2   1   0   6    8    8    8    9   10   15   15
Nei72             139 140 170 179 156 169 185 172 169 166 131  188  185  193  198  198  191  220
Nelson81           45  32  46  27  38  33  34  39  49  30  46   61   60   50   60   77   52   62
Nosofsky84         14  15  14  16  25  10  15  11  21  20   8   16   17   14   17   10   23   27
Orloci78           14   7  15  15  12  10  14  10   6   9   8   10   18   17   11   22   25   26
Pavlidis77         14  15  18   9  12  21   7   8  10   6  90  103   82   59   90   91   52   60
Punj83             11  13  14  11  13  12   9   8  15  20  17   23   21   18   24   51   30   45
Rammal86           13   9   9   7  16  11  12  14  14   5   0    0    0    0    0    0    0    0
Rand71              4   8   4   6   2   3   2  11   9  11  17   33   39   51   78  118  104   85
Reyment84          13  15  10  17  12  12  10   4  10  10  12   18   14   21   15   17   10   18
Ripley81           50  46  52  63  59  64  60  63  60  57 173  192  193  175  179  244  178  215
Rohlf82            10   6   7  10   3   3   6   4   4   6   2    2    2    7    2    4    2    3
Sammon69           22  27  29  36  32  47  45  47  43  63   0    0    0    0    0    0    0    0
Sankoff83          31  24  31  27  38  28  36  27  28  26  55   68   76   72   64   58   71   59
Sattath77           8  10  15   9  12   8  12  16   9  11   7    9    8    9   11   11    5    9
Schiffman81        22  32  34  33  25  21  20  28  19  24  20   17   14   12   18   18   14   17
Silverman86       117 131 183 140 161 192 172 158 191 206 264  306  287  350  384  462  410  383
Sneath73          385 374 422 435 406 386 367 360 355 357  94   99  111  139  122  133   92  128
Sokal63            53  52  45  53  42  35  44  43  40  36 225  272  251  252  287  282  225  282
Spaeth80            9  13  10  17  10   6  10  12   9  16  17   32   26   24   29   43   35   32
Spitzer74          12   5   5   2   4   2   2   4   3   8   6    3    3    7    4    9    5    4
Swofford81        116 127 171 151 135 127 125 115 102  84  55   67   46   36   32   20    9   24
Tversky77          46  68  65  82  69  81  74  70  63  97  62   97  109  101  126  142  134  136
VanLaarhoven87     46  56  65  45  45  42  48  44  33  32  54   65   58   64   53   64   38   61
VanRijsbergen79     0   0   2   0   0   0  46  54  38  88   2    2    8    7    9   19   12   18
Ward63             65  74  75  81  81  95 109 115 100 130 109  191  182  223  231  303  274  318
Wiley81            79  66  52  66  61  54  59  53  43  60  47   71   53   69   75   66   56   68
Wishart87          29  16  12  18  10   8  17   7  14  14   7    9   15   17   16   19   23   12
Wolfe70             6   9   8   8   8  11   8   8   9   4   7    7    8    7    5   13    8   16
Zahn71              8  11  14  13  11   5  10   8   9  21  20   24   14   22   24   29   30   25
"""

DISCIPLINE_YEAR_TABLE = """\
       94  95  96  97  98  99  00  01  02  03  04  05  06  07  08  09  10  11
Med     1   0   1   2   2   1   3   3   5   5  82 111 120 136 147 205 146 156
Bio   334 345 372 369 389 364 387 346 397 392 274 354 360 393 463 559 508 545
Phys    5   5   1   2   4   1   4   5   9   5  73  60 104  94 129 113 132 131
Chem   76  55  64  59  88  63  88  87 100 117  57  83  86  71  93 138 125 115
Astr    1   0   1   0   1   0   0   2   3   1   4   4   9   4  14   5   3  19
Math   70  63  84  63  82  89  77  79  86  79  23  42  27  39  41  55  48  62
Stat   98 105 117  94  92 128 111 104 125 101 207 255 266 287 312 340 345 310
Eng   108 118 121 137 135 132 134 161 216 217 355 424 468 470 753 517 472 689
Psych 128 155 164 141 128 132 147 118 124 151  77  72  85  94  97 103  93  99
Psy     2   0   0   1   0   0   0   2   1   0  15  12   6  12  10  13  10   9
Lit     2   1   1   1   3   1   3   2   1   5   9   9   8   4   3   7   9  10
Hum     9  19  15  15  18  14  23  17  19  36   1   0   1   1   4   4   7   4
Eco     0   0   0   0   2   0   0   2   1   1  26  29  33  30  40  53  45  42
Soc    21  24  27  16  25  17  17  24  24  20   7   2   5  16   2  13  11  12
"""

PROFILE_CATALOG = """\
Adams72	ADAMS EN 72
Anderberg73	ANDERBERG MR 73
Arabie87	ARABIE P 87
Avise74	AVISE JC 74
Benzecri73	BENZECRI JP 73
Bezdek81	BEZDEK JC 81
Bishop95	BISHOP CM 95
Blashfield76	BLASHFIELD RK 76
Breiman84	BREIMAN L 84
Carroll70,80	CARROLL JD 70,CARROLL JD 80	Carroll70,Carroll80
Cormack71	CORMACK RM 71
Cover67	COVER TM 67
Devijver82	DEVIJVER PA 82
Diggle83	DIGGLE PJ 83
Duda73	DUDA RO 73
Efron83	EFRON B 83
Eldredge80	ELDREDGE N 80
Everitt79,80	EVERITT BS 79,EVERITT BS 80	Everitt79,Everitt80
Farris72	FARRIS JS 72
Felsenstein82	FELSENSTEIN J 82
Fisher36	FISHER RA 36
Fitch67	FITCH WM 67
Friedman77	FRIEDMAN JH 77
Fu74,82	FU KS 74,FU KS 82	Fu74,Fu82
Fukunaga72	FUKUNAGA K 72
Gauch82	GAUCH HG 82
Gnanadesikan77	GNANADESIKAN 77
Gordon81	GORDON AD 81
Gower66	GOWER JC 66
Greenacre84	GREENACRE MJ 84
Guttman68	GUTTMAN L 68
Hand81	HAND DJ 81
Hartigan75	HARTIGAN JA 75
Hennig66	HENNIG W 66
Hill74	HILL MO 74
Huber85	HUBER PJ 85
Hubert7685	HUBERT L 76,HUBERT LJ 85	Hubert76,Hubert85
Jain88	JAIN AK 88
Jardine71	JARDINE N 71
Johnson67	JOHNSON SC 67
Kluge69	KLUGE AG 69
Kohonen95	KOHONEN T 95
Kruskal64,78	KRUSKAL JB 64,KRUSKAL JB 78	Kruskal64,Kruskal78
Lance67	LANCE GN 67
Legendre83	LEGENDRE L 83
Lorr83	LORR M 83
Maddison84	MADDISON WP 84
Mantel67	MANTEL N 67
Mayr69	MAYR E 69
McLachlan88,92,97	MCLACHLAN GJ 88,MCLACHLAN GJ 92,MCLACHLAN GJ 97	McLachlan88,McLachlan92,McLachlan97
Michalski83	MICHALSKI RS 83
Milligan80,81,85	MILLIGAN GW 80,MILLIGAN GW 81,MILLIGAN GW 85	Milligan80,Milligan81,Milligan85
Murtagh83	MURTAGH F 83
Nei72	NEI M 72
Nelson81	NELSON G 81
Nosofsky84	NOSOFSKY RM 84
Orloci78	ORLOCI L 78
Pavlidis77	PAVLIDIS T 77
Punj83	PUNJ G 83
Rammal86	RAMMAL R 86
Rand71	RAND WM 71
Reyment84	REYMENT RA 84
Ripley81	RIPLEY BD 81
Rohlf82	ROHLF FJ 82
Sammon69	SAMMON JW 69
Sankoff83	SANKOFF D 83
Sattath77	SATTATH S 77
Schiffman81	SCHIFFMAN SS 81
Silverman86	SILVERMAN BW 86
Sneath73	SNEATH PHA 73
Sokal63	SOKAL RR 63
Spaeth80	SPATH H 80
Spitzer74	SPITZER RL 74
Swofford81	SWOFFORD DL 81
Tversky77	TVERSKY A 77
VanLaarhoven87	VANLAARHOVEN 87
VanRijsbergen79	VANRIJSBERGEN 79
Ward63	WARD JH 63
Wiley81	WILEY EO 81
Wishart87	WISHART D 87
Wolfe70	WOLFE JH 70
Zahn71	ZAHN CT 71
"""

DISCIPLINE_LEXICON = """\
Med	Medicine,Medical
Bio	Biology,Biological
Phys	Physics,Physical
Chem	Chemistry,Chemical
Astr	Astronomy,Astronomical
Math	Mathematics,Mathematical
Stat	Statistics,Statistical
Eng	Engineering
Psych	Psychology,Psychological
Psy	Psychiatry,Psychiatric
Lit	Literature,Literary
Hum	Humanities
Eco	Economics,Economic
Soc	Sociology,Sociological
Ecol	Ecology,Ecological
Mgt	Management
"""
