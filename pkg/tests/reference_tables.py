"""Reference tables of published values, transcribed cell for cell.

Each entry maps a row label (h or k) to the printed values; ``start`` is
the first column index (n or i), overridden per row by ``row_start`` where a
short row is right-aligned. Rows are as long as they were printed.
"""

TABLES = {'p4_by_size': {'start': 0,
                'rows': {0: [1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1],
                         1: [0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14],
                         2: [0, 0, 0, 0, 0, 0, 1, 3, 6, 10, 15, 21, 28, 36, 45],
                         3: [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 4, 10, 20],
                         4: [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0]}},
 'p_total': {'start': 0,
             'rows': {0: [1, 2, 4, 8, 16, 32, 64, 128, 256, 512, 1024, 2048, 4096, 8192, 16384],
                      1: [1, 2, 3, 5, 8, 13, 21, 34, 55, 89, 144, 233, 377, 610, 987],
                      2: [1, 2, 3, 4, 6, 9, 13, 19, 28, 41, 60, 88, 129, 190, 281],
                      3: [1, 2, 3, 4, 5, 7, 10, 14, 19, 26, 36, 50, 69, 95, 130],
                      4: [1, 2, 3, 4, 5, 6, 8, 11, 15, 20, 26, 34, 45, 60, 80],
                      5: [1, 2, 3, 4, 5, 6, 7, 9, 12, 16, 21, 27, 35, 46, 61],
                      6: [1, 2, 3, 4, 5, 6, 7, 8, 10, 13, 17, 22, 28, 36, 47],
                      7: [1, 2, 3, 4, 5, 6, 7, 8, 9, 11, 14, 18, 23, 29, 37],
                      8: [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 15, 19, 24, 30],
                      9: [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 13, 16, 20, 25],
                      10: [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15]}},
 'p_total_rec': {'start': 0,
                 'rows': {0: [1, 2, 4, 8, 16, 32, 64, 128, 256, 512, 1024, 2048],
                          1: [1, 2, 3, 5, 8, 13, 21, 34, 55, 89, 144, 233],
                          2: [1, 2, 3, 4, 6, 9, 13, 19, 28, 41, 60, 88],
                          3: [1, 2, 3, 4, 5, 7, 10, 14, 19, 26, 36, 50],
                          4: [1, 2, 3, 4, 5, 6, 8, 11, 15, 20, 26, 34],
                          5: [1, 2, 3, 4, 5, 6, 7, 9, 12, 16, 21, 27],
                          6: [1, 2, 3, 4, 5, 6, 7, 8, 10, 13, 17, 22],
                          7: [1, 2, 3, 4, 5, 6, 7, 8, 9, 11, 14, 18],
                          8: [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 15],
                          9: [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 13],
                          10: [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12]}},
 'h_weighted': {'start': 0,
                'rows': {0: [0, 1, 4, 12, 32, 80, 192, 448, 1024, 2304, 5120, 11264],
                         1: [0, 1, 2, 5, 10, 20, 38, 71, 130, 235, 420, 744],
                         2: [0, 1, 2, 3, 6, 11, 18, 30, 50, 81, 130, 208],
                         3: [0, 1, 2, 3, 4, 7, 12, 19, 28, 42, 64, 97],
                         4: [0, 1, 2, 3, 4, 5, 8, 13, 20, 29, 40, 56],
                         5: [0, 1, 2, 3, 4, 5, 6, 9, 14, 21, 30, 41],
                         6: [0, 1, 2, 3, 4, 5, 6, 7, 10, 15, 22, 31],
                         7: [0, 1, 2, 3, 4, 5, 6, 7, 8, 11, 16, 23],
                         8: [0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 12, 17],
                         9: [0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 13],
                         10: [0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11]}},
 't_7_2': {'start': 1,
           'rows': {0: [0, 0, 0, 0, 0, 0, 0],
                    1: [1, 1, 1, 1, 1, 1, 1],
                    2: [4, 3, 2, 2, 2, 3, 4],
                    3: [1, 0, 0, 1, 0, 0, 1]}},
 't_10_2': {'start': 1,
            'rows': {0: [0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
                     1: [1, 1, 1, 1, 1, 1, 1, 1, 1, 1],
                     2: [7, 6, 5, 5, 5, 5, 5, 5, 6, 7],
                     3: [10, 6, 3, 5, 6, 6, 5, 3, 6, 10],
                     4: [1, 0, 0, 1, 0, 0, 1, 0, 0, 1]}},
 't_15_3': {'start': 1,
            'rows': {0: [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
                     1: [1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1],
                     2: [11, 10, 9, 8, 8, 8, 8, 8, 8, 8, 8, 8, 9],
                     3: [28, 21, 15, 10, 13, 15, 16, 16, 16, 15, 13, 10, 15],
                     4: [10, 4, 1, 0, 6, 6, 3, 0, 3, 6, 6, 0, 1]}},
 't_6_1': {'start': 1,
           'rows': {0: [0, 0, 0, 0, 0, 0],
                    1: [1, 1, 1, 1, 1, 1],
                    2: [4, 3, 3, 3, 3, 4],
                    3: [3, 1, 2, 2, 1, 3]}},
 'h_via_t': {'start': 0,
             'rows': {0: [0, 1, 4, 12, 32, 80, 192, 448, 1024, 2304, 5120, 11264],
                      1: [0, 1, 2, 5, 10, 20, 38, 71, 130, 235, 420, 744],
                      2: [0, 1, 2, 3, 6, 11, 18, 30, 50, 81, 130, 208],
                      3: [0, 1, 2, 3, 4, 7, 12, 19, 28, 42, 64, 97],
                      4: [0, 1, 2, 3, 4, 5, 8, 13, 20, 29, 40, 56],
                      5: [0, 1, 2, 3, 4, 5, 6, 9, 14, 21, 30, 41],
                      6: [0, 1, 2, 3, 4, 5, 6, 7, 10, 15, 22, 31],
                      7: [0, 1, 2, 3, 4, 5, 6, 7, 8, 11, 16, 23],
                      8: [0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 12, 17],
                      9: [0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 13],
                      10: [0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11]}},
 'h_fibonacci': {'start': 1,
                 'rows': {0: [1, 2, 4, 8, 16, 32, 64, 128, 256, 512, 1024, 2048, 4096],
                          1: [1, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89, 144, 233],
                          2: [1, 1, 1, 2, 3, 4, 6, 9, 13, 19, 28, 41, 60],
                          3: [1, 1, 1, 1, 2, 3, 4, 5, 7, 10, 14, 19, 26],
                          4: [1, 1, 1, 1, 1, 2, 3, 4, 5, 6, 8, 11, 15],
                          5: [1, 1, 1, 1, 1, 1, 2, 3, 4, 5, 6, 7, 9],
                          6: [1, 1, 1, 1, 1, 1, 1, 2, 3, 4, 5, 6, 7],
                          7: [1, 1, 1, 1, 1, 1, 1, 1, 2, 3, 4, 5, 6],
                          8: [1, 1, 1, 1, 1, 1, 1, 1, 1, 2, 3, 4, 5],
                          9: [1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 2, 3, 4],
                          10: [1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 2, 3]}},
 'h_conv': {'start': 0,
            'rows': {0: [0, 1, 4, 12, 32, 80, 192, 448, 1024, 2304, 5120, 11264],
                     1: [0, 1, 2, 5, 10, 20, 38, 71, 130, 235, 420, 744],
                     2: [0, 1, 2, 3, 6, 11, 18, 30, 50, 81, 130, 208],
                     3: [0, 1, 2, 3, 4, 7, 12, 19, 28, 42, 64, 97],
                     4: [0, 1, 2, 3, 4, 5, 8, 13, 20, 29, 40, 56],
                     5: [0, 1, 2, 3, 4, 5, 6, 9, 14, 21, 30, 41],
                     6: [0, 1, 2, 3, 4, 5, 6, 7, 10, 15, 22, 31],
                     7: [0, 1, 2, 3, 4, 5, 6, 7, 8, 11, 16, 23],
                     8: [0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 12, 17],
                     9: [0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 13],
                     10: [0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11]}},
 'q1_by_size': {'start': 0,
                'rows': {0: [1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1],
                         1: [0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16],
                         2: [0, 0, 0, 0, 2, 5, 9, 14, 20, 27, 35, 44, 54, 65, 77, 90, 104],
                         3: [0, 0, 0, 0, 0, 0, 2, 7, 16, 30, 50, 77, 112, 156, 210, 275, 352],
                         4: [0, 0, 0, 0, 0, 0, 0, 0, 2, 9, 25, 55, 105, 182, 294, 450, 660],
                         5: [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 11, 36, 91, 196, 378, 672],
                         6: [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 13, 49, 140, 336],
                         7: [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 15, 64],
                         8: [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2]}},
 'q2_by_size': {'start': 0,
                'rows': {0: [1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1],
                         1: [0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17],
                         2: [0, 0, 0, 0, 0, 0, 3, 7, 12, 18, 25, 33, 42, 52, 63, 75, 88, 102],
                         3: [0, 0, 0, 0, 0, 0, 0, 0, 0, 3, 10, 22, 40, 65, 98, 140, 192, 255],
                         4: [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 3, 13, 35, 75, 140, 238],
                         5: [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 3, 16, 51]},
                'row_start': {4: 1, 5: 1}},
 'q3_by_size': {'start': 0,
                'rows': {0: [1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1],
                         1: [0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14],
                         2: [0, 0, 0, 0, 0, 0, 0, 0, 0, 4, 9, 15, 22, 30, 39],
                         3: [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 4, 13, 28],
                         4: [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0]}},
 'q4_by_size': {'start': 0,
                'rows': {0: [1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1],
                         1: [0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14],
                         2: [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 5, 11, 18, 26, 35],
                         3: [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0]}},
 'q_total': {'start': 0,
             'rows': {0: [1,
                          2,
                          4,
                          8,
                          16,
                          32,
                          64,
                          128,
                          256,
                          512,
                          1024,
                          2048,
                          4096,
                          8192,
                          16384,
                          32768,
                          65536,
                          131072],
                      1: [1,
                          2,
                          3,
                          4,
                          7,
                          11,
                          18,
                          29,
                          47,
                          76,
                          123,
                          199,
                          322,
                          521,
                          843,
                          1364,
                          2207,
                          3607],
                      2: [1, 2, 3, 4, 5, 6, 10, 15, 21, 31, 46, 67, 98, 144, 211, 309, 453, 671],
                      3: [1, 2, 3, 4, 5, 6, 7, 8, 13, 19, 26, 34, 47, 66, 92, 126, 173, 241],
                      4: [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 16, 23, 31, 40, 50, 66, 89, 119],
                      5: [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 19, 27, 36, 46, 57, 74],
                      6: [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 22, 31, 41, 54],
                      7: [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 25, 34],
                      8: [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17, 26],
                      9: [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17, 18],
                      10: [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17, 18]}},
 'q_total_rec': {'start': 0,
                 'rows': {0: [1,
                              2,
                              4,
                              8,
                              16,
                              32,
                              64,
                              128,
                              256,
                              512,
                              1024,
                              2048,
                              4096,
                              8192,
                              16384,
                              32768,
                              65536,
                              131072],
                          1: [1,
                              2,
                              3,
                              4,
                              7,
                              11,
                              18,
                              29,
                              47,
                              76,
                              123,
                              199,
                              322,
                              521,
                              843,
                              1364,
                              2207,
                              3607],
                          2: [1,
                              2,
                              3,
                              4,
                              5,
                              6,
                              10,
                              15,
                              21,
                              31,
                              46,
                              67,
                              98,
                              144,
                              211,
                              309,
                              453,
                              671],
                          3: [1, 2, 3, 4, 5, 6, 7, 8, 13, 19, 26, 34, 47, 66, 92, 126, 173, 241],
                          4: [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 16, 23, 31, 40, 50, 66, 89, 119],
                          5: [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 19, 27, 36, 46, 57, 74],
                          6: [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 22, 31, 41, 54],
                          7: [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 25, 34],
                          8: [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17, 26],
                          9: [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17, 18],
                          10: [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17, 18]}},
 'm_weighted': {'start': 0,
                'rows': {0: [0,
                             1,
                             4,
                             12,
                             32,
                             80,
                             192,
                             448,
                             1024,
                             2304,
                             5120,
                             11264,
                             24576,
                             53248,
                             114688,
                             245760],
                         1: [0, 1, 2, 3, 8, 15, 30, 56, 104, 189, 340, 605, 1068, 1872, 3262, 5655],
                         2: [0, 1, 2, 3, 4, 5, 12, 21, 32, 54, 90, 143, 228, 364, 574, 900],
                         3: [0, 1, 2, 3, 4, 5, 6, 7, 16, 27, 40, 55, 84, 130, 196, 285],
                         4: [0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 20, 33, 48, 65, 84, 120],
                         5: [0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 24, 39, 56, 75],
                         6: [0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 28, 45],
                         7: [0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15],
                         8: [0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15],
                         9: [0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15],
                         10: [0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15]}},
 'm_closed': {'start': 0,
              'rows': {0: [0,
                           1,
                           4,
                           12,
                           32,
                           80,
                           192,
                           448,
                           1024,
                           2304,
                           5120,
                           11264,
                           24576,
                           53248,
                           114688,
                           245760],
                       1: [0, 1, 2, 3, 8, 15, 30, 56, 104, 189, 340, 605, 1068, 1872, 3262, 5655],
                       2: [0, 1, 2, 3, 4, 5, 12, 21, 32, 54, 90, 143, 228, 364, 574, 900],
                       3: [0, 1, 2, 3, 4, 5, 6, 7, 16, 27, 40, 55, 84, 130, 196, 285],
                       4: [0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 20, 33, 48, 65, 84, 120],
                       5: [0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 24, 39, 56, 75],
                       6: [0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 28, 45],
                       7: [0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15],
                       8: [0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15],
                       9: [0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15],
                       10: [0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15]}},
 'h_lucas': {'start': 1,
             'rows': {0: [1, 2, 4, 8, 16, 32, 64, 128, 256, 512, 1024, 2048, 4096, 8192, 16384],
                      1: [2, 1, 3, 4, 7, 11, 18, 29, 47, 76, 123, 199, 322, 521, 843],
                      2: [3, 1, 1, 4, 5, 6, 10, 15, 21, 31, 46, 67, 98, 144, 211],
                      3: [4, 1, 1, 1, 5, 6, 7, 8, 13, 19, 26, 34, 47, 66, 92],
                      4: [5, 1, 1, 1, 1, 6, 7, 8, 9, 10, 16, 23, 31, 40, 50],
                      5: [6, 1, 1, 1, 1, 1, 7, 8, 9, 10, 11, 12, 19, 27, 36],
                      6: [7, 1, 1, 1, 1, 1, 1, 8, 9, 10, 11, 12, 13, 14, 22],
                      7: [8, 1, 1, 1, 1, 1, 1, 1, 9, 10, 11, 12, 13, 14, 15],
                      8: [9, 1, 1, 1, 1, 1, 1, 1, 1, 10, 11, 12, 13, 14, 15],
                      9: [10, 1, 1, 1, 1, 1, 1, 1, 1, 1, 11, 12, 13, 14, 15],
                      10: [11, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 12, 13, 14, 15]}},
 'm_conjecture': {'start': 0,
                  'rows': {0: [0,
                               1,
                               4,
                               12,
                               32,
                               80,
                               192,
                               448,
                               1024,
                               2304,
                               5120,
                               11264,
                               24576,
                               53248,
                               114688,
                               245760],
                           1: [0,
                               0,
                               2,
                               3,
                               8,
                               15,
                               30,
                               56,
                               104,
                               189,
                               340,
                               605,
                               1068,
                               1872,
                               3262,
                               5655],
                           2: [0, 0, 0, 3, 4, 5, 12, 21, 32, 54, 90, 143, 228, 364, 574, 900],
                           3: [0, 0, 0, 0, 4, 5, 6, 7, 16, 27, 40, 55, 84, 130, 196, 285],
                           4: [0, 0, 0, 0, 0, 5, 6, 7, 8, 9, 20, 33, 48, 65, 84, 120],
                           5: [0, 0, 0, 0, 0, 0, 6, 7, 8, 9, 10, 11, 24, 39, 56, 75],
                           6: [0, 0, 0, 0, 0, 0, 0, 7, 8, 9, 10, 11, 12, 13, 28, 45],
                           7: [0, 0, 0, 0, 0, 0, 0, 0, 8, 9, 10, 11, 12, 13, 14, 15],
                           8: [0, 0, 0, 0, 0, 0, 0, 0, 0, 9, 10, 11, 12, 13, 14, 15],
                           9: [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 10, 11, 12, 13, 14, 15],
                           10: [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 11, 12, 13, 14, 15]}}}


def cells(name):
    """Yield (row, column, printed value) for every printed cell of a table."""
    table = TABLES[name]
    for row, values in table["rows"].items():
        first = table.get("row_start", {}).get(row, table["start"])
        for j, value in enumerate(values):
            yield row, first + j, value
