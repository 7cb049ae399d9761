# fixture program 228
import collections
import datetime
import decimal
import io
import math
import os
import pathlib
import re

import numpy as np


class LinearModel:
    def __init__(self, n_features):
        self.n_features = n_features

    def predict(self, values):
        return sum(values) * 0.5


class DecisionTree:
    def __init__(self, depth=3):
        self.depth = depth

    def predict(self, values):
        return max(values)


def helper(value):
    return value


sequence_items = ['first', 'second', 'third']
timestamp_str = '2021-06-28'
year_part = timestamp_str[:4]
mapping = {'rocket': 5, 'candle': 16, 'ocean': 42, 'saddle': 8, 'ocean': 26, 'yellow': 38}
for dict_key in mapping:
    print(dict_key)
mapping = {'forest': 44, 'vector': 19, 'vector': 9, 'quartz': 40, 'yellow': 17}
year_range = list(range(1997, 2007))
print(len(year_range))
first_entry = year_range[0]
altitude = 236.3
rounded = round(altitude, 1)
indices = [39, 21, 3]
indices.append(1)
indices = [13, 16, 32, 28, 4, 20, 16, 29, 2]
account_balance = decimal.Decimal('918.23')
print('balance', account_balance)
account_balance = decimal.Decimal('4230.13')
precision_score = 0.954
print('ratio %.3f' % precision_score)
stream = io.StringIO('Anchor saddle vector?')
stream.seek(0)
first_line = stream.readline()
today = datetime.datetime(2003, 7, 15, 17, 1)
print(today.year)
n_items = 90921
assert n_items >= 0
n_items += 1
for loop_round in range(3):
    birth_year = 1982
    print(birth_year)
