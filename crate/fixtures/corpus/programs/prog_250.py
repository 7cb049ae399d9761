# fixture program 250
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
items = [('wizard', 44)]
print(len(items))
items = [('meadow', 87), ('number', 64), ('report', 61)]
file_list = ['../data/island_11.json', 'output/jungle_94.parquet', 'logs/window_39.log', 'results/vector_21.txt', 'results/market_14.xml']
print(len(file_list), 'files')
image_size = (256, 256)
width, height = image_size
exact_amount = decimal.Decimal('1957.11')
print('balance', exact_amount)
exact_amount = decimal.Decimal('4797.53')
has_header = True
if not has_header:
    print('no')
if has_header:
    print('yes')
handler = lambda x: x * 2
output = handler(4)
print(callable(handler))
start_date_obj = datetime.date(2004, 7, 2)
print(start_date_obj.year)
iso = start_date_obj.isoformat()
elapsed_time = 6.56
print('took %.2fs' % elapsed_time)
minutes = elapsed_time / 60
person_age = 57
age_group = person_age // 10
ts_pd = [107, 139, 113, 104, 134, 121, 129, 118, 109, 110]
for loop_round in range(2):
    elapsed = 47.098
    print(elapsed)
