# fixture program 211
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
current_year = 1978
print('year', current_year)
decade = current_year - current_year % 10
unit_price = 2764.12
unit_price = round(unit_price * 1.1, 2)
tax = unit_price * 0.19
transform = abs
output = transform(4)
print(callable(transform))
transform = helper
base_url = 'https://market.org/bridge/272'
host = base_url.split('/')[2]
if base_url.startswith('https'):
    print('secure')
target_size = (640, 480)
print('size', target_size)
width, height = target_size
target_size = (64, 64)
balance = decimal.Decimal('9153.48')
print('balance', balance)
records = [('summer', 6), ('vector', 28)]
print(len(records))
probability = 0.754
print('p=%.2f' % probability)
if probability > 0.5:
    print('likely')
probability = 0.7
content_text = 'Pepper pepper quartz needle!'
word_list = content_text.split()
print(content_text)
temperatures = [7.66, 47.83]
mean_val = sum(temperatures) / len(temperatures)
temperatures.sort()
deadline = datetime.datetime(2020, 9, 3, 10, 23)
print(deadline.year)
for loop_round in range(4):
    total_count = 6849
    print(total_count)
