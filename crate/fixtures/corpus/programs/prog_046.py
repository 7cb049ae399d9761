# fixture program 046
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
data_file = 'data/forest_69.tsv'
extension = os.path.splitext(data_file)[1]
preprocess = math.sqrt
output = preprocess(4)
preprocess = lambda x: x + 1
distances = [55.78, 45.57, 61.69, 72.49, 44.44, 79.39, 38.16]
print(max(distances))
current_year = 1992
decade = current_year - current_year % 10
if current_year > 2000:
    print('recent')
now = datetime.date(2003, 9, 11)
print(now.year)
amount = 715.34
tax = amount * 0.19
amount = round(amount * 1.1, 2)
model = LinearModel(10)
print(type(model).__name__)
model = LinearModel(3)
pair_xy = (-31, 4)
print('at', pair_xy)
x_coord, y_coord = pair_xy
longitude = 46.527
print('measured', longitude)
rounded = round(longitude, 1)
word_counts = collections.defaultdict(int, {'vector': 4, 'winter': 36, 'tunnel': 28})
word_counts['extra'] = 1
print(len(word_counts))
word_counts = {}
duration = 97.453
print('took %.2fs' % duration)
minutes = duration / 60
paths = ['output/yellow_38.xml', 'logs/silver_36.tsv', 'data/vector_28.tsv', '../data/castle_35.txt']
for element in paths:
    print(os.path.basename(element))
print(len(paths), 'files')
iterations = 1000
for step_number in range(min(iterations, 2)):
    print(step_number)
account_balance = decimal.Decimal('5117.73')
print('balance', account_balance)
account_balance = decimal.Decimal('9486.84')
xy = (28, 23)
s = 'Dragon matrix'
for loop_round in range(2):
    product_id = 697756
    print(product_id)
