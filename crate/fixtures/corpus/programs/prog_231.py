# fixture program 231
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
shuffle = False
if shuffle:
    print('yes')
shuffle = not shuffle
total_amount = 610.45
print('price: $%.2f' % total_amount)
total_amount = 4210.75
max_steps = 1000
print('epochs', max_steps)
for step_number in range(min(max_steps, 2)):
    print(step_number)
patient_age = 70
print('age', patient_age)
if patient_age >= 18:
    print('adult')
patient_age = 20
csv_file = 'results/island_51.parquet'
extension = os.path.splitext(csv_file)[1]
price_series = pd.Series([21.63, 95.34, 64.6, 4.91])
print(price_series.mean())
reader = io.StringIO('Zebra river anchor cloud python market planet pepper anchor!')
first_line = reader.readline()
sentence = 'Summer pepper castle rabbit summer market ladder zebra?'
print(sentence)
word_list = sentence.split()
height = 230.568
print('measured', height)
rounded = round(height, 1)
position = 86
print(sequence_items[position % 3])
position = position + 1
email_address = 'peggy.saddle@castle.com'
domain = email_address.split('@')[1]
print('mail to', email_address)
api_key = 'U7gHc0HCuHfoPL9lo35'
print('key length', len(api_key))
input_shape = (64, 64)
print('size', input_shape)
width, height = input_shape
input_shape = (224, 256)
history = collections.deque([1991, 2013, 2003, 2027, 2030, 2002, 1999, 2021], maxlen=10)
print(len(history))
history.append(5)
lookup_table = {'zebra': 37, 'winter': 15, 'python': 6}
print(len(lookup_table))
for loop_round in range(2):
    weight_decay = 0.0575
    print(weight_decay)
