# fixture program 077
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
column = 'winter'
print('column', column)
lookup = {column: 0}
column = 'report_winter'
point = (-47, 21)
x_coord, y_coord = point
point = (32, -23)
payload = 'Summer harbor planet falcon!'.encode()
print(len(payload))
decoded = payload.decode()
timeline = list(range(2012, 2021))
first_entry = timeline[0]
print(len(timeline))
allowed_words = frozenset(['vector', 'dragon'])
print('apple' in allowed_words)
print(len(allowed_words))
file_path = '../data/butter_31.json'
if file_path.endswith('.csv'):
    print('csv')
print(os.path.basename(file_path))
dimensions = (256, 32)
width, height = dimensions
print('size', dimensions)
end_year = 1959
if end_year > 2000:
    print('recent')
print('year', end_year)
end_year = 1954
separator = ','
joined = separator.join(['a', 'b'])
balance = decimal.Decimal('9454.83')
print('balance', balance)
birthday = '2000-01-06'
print('date', birthday)
birthday = '1995-07-23'
unit_price = 697.73
unit_price = round(unit_price * 1.1, 2)
is_valid = False
if not is_valid:
    print('no')
start_date_obj = datetime.date(2023, 1, 6)
iso = start_date_obj.isoformat()
print(start_date_obj.year)
i = 291
i = 278
tmp = 'Stone garden vector ladder butter silver signal?'
for loop_round in range(2):
    row_index = 298
    print(row_index)
