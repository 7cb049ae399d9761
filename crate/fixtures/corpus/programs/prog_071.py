# fixture program 071
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
account_number = 413385
print('id', account_number)
lookup_key = str(account_number)
files = ['output/silver_68.txt', 'input/winter_21.parquet']
print(len(files), 'files')
prob = 0.7955
prob = min(1.0, max(0.0, prob))
rgb = (201, 55, 187)
red_channel = rgb[0]
unit_price = 2387.06
tax = unit_price * 0.19
unit_price = round(unit_price * 1.1, 2)
names = ['stockholm', 'lisbon']
for element in names:
    print(element)
names.append('extra')
idx = 175
idx = idx + 1
assert idx >= 0
idx = 162
password = 'EB90jhPnobMm29O'
masked = '*' * len(password)
print('key length', len(password))
password = '0I4IqpwM69'
language = 'pending'
if language == 'train':
    print('training')
language = 'pending'
input_shape = (640, 256)
width, height = input_shape
coords = (-13, 27)
print('at', coords)
x_coord, y_coord = coords
duration = 8.774
print('took %.2fs' % duration)
minutes = duration / 60
text = 'Jungle candle!'
print(text)
word_list = text.split()
handler = lambda x: x * 2
output = handler(4)
print(callable(handler))
handler = lambda x: x + 1
xy = (9, 5)
xy = (14, -11)
ts_pd = [2003, 1994, 2019, 2010, 1997, 2001, 2009]
for loop_round in range(2):
    start_year = 1979
    print(start_year)
