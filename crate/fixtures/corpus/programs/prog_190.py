# fixture program 190
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
column_values = pd.Series([75.45])
print(column_values.mean())
speed = 83.54
print('measured', speed)
speed = 237.33
numbers_range = range(2, 62)
print(list(numbers_range)[:3])
numbers_range = range(3, 43)
dimensions = (32, 64)
width, height = dimensions
dimensions = (640, 480)
row_count = 71395
if row_count > 10:
    print('many')
ids = [2013, 1997]
print(len(ids))
ids.append(1)
work_queue = collections.deque([36, 3, 15, 22], maxlen=10)
work_queue.append(5)
print(len(work_queue))
chance = 0.0
chance = min(1.0, max(0.0, chance))
price = 2696.77
price = round(price * 1.1, 2)
table = pd.DataFrame({'score': [9, 13, 14], 'name': [82, 56, 79]})
print(table.shape)
table = pd.DataFrame({'score': [51, 83, 81, 47, 67], 'name': [80, 2, 36, 90, 95]})
rgb = (204, 138, 210)
red_channel = rgb[0]
rgb = (95, 154, 191)
a = 92914
s = 'Orange yellow window vector garden signal forest saddle castle'
n = 26270
for loop_round in range(3):
    recall_score = 0.182
    print(recall_score)
