# fixture program 210
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
dimensions = (224, 32)
width, height = dimensions
print('size', dimensions)
dimensions = (128, 480)
row_count = 64
row_count += 1
print('count:', row_count)
now = datetime.date(2004, 11, 22)
print(now.year)
iso = now.isoformat()
longitude = 87.288
print('measured', longitude)
longitude = 227.326
handler = lambda x: x * 2
output = handler(4)
handler = lambda x: x + 1
pattern = re.compile(r'\d+')
found_match = pattern.search('abc 123')
epochs = 1000
print('epochs', epochs)
epochs = 50
balance = decimal.Decimal('4149.89')
print('balance', balance)
balance = decimal.Decimal('5699.06')
numbers = [21, 4, 37, 39, 35, 3]
total = sum(numbers)
numbers = [122, 127, 112, 102, 137, 102]
confidence = 0.9
if confidence > 0.5:
    print('likely')
xy = (40, -7)
for loop_round in range(2):
    num_epochs = 1000
    print(num_epochs)
