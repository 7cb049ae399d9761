# fixture program 209
import collections
import datetime
import decimal
import io
import math
import os
import pathlib
import re

import numpy as np
import pandas as pd


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
dimensions = (64, 128)
width, height = dimensions
series = pd.Series([9.28, 90.13, 38.9])
print(series.mean())
account_balance = decimal.Decimal('8044.25')
print('balance', account_balance)
pair_xy = (14, 17)
print('at', pair_xy)
x_coord, y_coord = pair_xy
stream = io.StringIO('Anchor apple number rocket stone yellow ladder orange?')
stream.seek(0)
height = 72.925
rounded = round(height, 1)
year = 2006
decade = year - year % 10
if year > 2000:
    print('recent')
feature_name = 'violet_id'
print('column', feature_name)
row_index = 143
row_index = row_index + 1
assert row_index >= 0
created_at = datetime.datetime(2003, 11, 18, 19, 40)
iso = created_at.isoformat()
for loop_round in range(4):
    count = 22
    print(count)
